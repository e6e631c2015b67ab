// Dense univariate polynomials over QNum, constant term first. Canonical
// form never stores a zero leading coefficient; the zero polynomial has an
// empty coefficient vector and degree() == kZeroPolyDegree.
#pragma once

#include "abelsign/qnum.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abelsign {

inline constexpr int kZeroPolyDegree = -1;

class UPoly {
  public:
    UPoly() = default;
    UPoly(std::initializer_list<QNum> ascending) : c_(ascending) { trim(); }
    explicit UPoly(std::vector<QNum> ascending) : c_(std::move(ascending)) { trim(); }

    static UPoly constant(QNum v) {
        UPoly p;
        if (!v.is_zero()) p.c_.push_back(std::move(v));
        return p;
    }
    // x^k with coefficient c
    static UPoly monomial(QNum c, int k) {
        UPoly p;
        if (!c.is_zero()) {
            p.c_.assign(static_cast<std::size_t>(k) + 1, QNum(0));
            p.c_.back() = std::move(c);
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const QNum& lc() const {
        if (c_.empty()) throw std::domain_error("UPoly: leading coefficient of zero polynomial");
        return c_.back();
    }
    QNum coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return QNum(0);
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<QNum>& coeffs() const { return c_; }

    QNum eval(const QNum& x) const {
        QNum acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    double eval(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
        return acc;
    }

    UPoly derivative() const {
        std::vector<QNum> out;
        for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(QNum(static_cast<long long>(i)) * c_[i]);
        return UPoly(std::move(out));
    }

    UPoly monic() const {
        if (is_zero()) throw std::domain_error("UPoly: monic of zero polynomial");
        return *this * UPoly::constant(QNum(1) / lc());
    }

    friend UPoly operator+(const UPoly& f, const UPoly& g) {
        std::vector<QNum> out(std::max(f.c_.size(), g.c_.size()), QNum(0));
        for (std::size_t i = 0; i < f.c_.size(); ++i) out[i] += f.c_[i];
        for (std::size_t i = 0; i < g.c_.size(); ++i) out[i] += g.c_[i];
        return UPoly(std::move(out));
    }
    friend UPoly operator-(const UPoly& f, const UPoly& g) { return f + (-g); }
    UPoly operator-() const {
        std::vector<QNum> out(c_);
        for (auto& t : out) t = -t;
        return UPoly(std::move(out));
    }
    friend UPoly operator*(const UPoly& f, const UPoly& g) {
        if (f.is_zero() || g.is_zero()) return UPoly();
        std::vector<QNum> out(f.c_.size() + g.c_.size() - 1, QNum(0));
        for (std::size_t i = 0; i < f.c_.size(); ++i)
            for (std::size_t j = 0; j < g.c_.size(); ++j) out[i + j] += f.c_[i] * g.c_[j];
        return UPoly(std::move(out));
    }
    friend UPoly operator*(const UPoly& f, const QNum& s) { return f * UPoly::constant(s); }

    friend bool operator==(const UPoly& f, const UPoly& g) { return f.c_ == g.c_; }
    friend bool operator!=(const UPoly& f, const UPoly& g) { return !(f == g); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].str() + ")";
            if (i == 1) s += "*x";
            if (i > 1) s += "*x^" + std::to_string(i);
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<QNum> c_;
};

// Exact field division: f = q*g + r with deg r < deg g.
inline std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g) {
    if (g.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    UPoly r = f;
    std::vector<QNum> q(std::max(0, f.degree() - g.degree() + 1), QNum(0));
    const QNum glc_inv = QNum(1) / g.lc();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const int k = r.degree() - g.degree();
        const QNum c = r.lc() * glc_inv;
        q[static_cast<std::size_t>(k)] = c;
        r = r - UPoly::monomial(c, k) * g;
    }
    return {UPoly(std::move(q)), r};
}

// Monic greatest common divisor.
inline UPoly gcd(const UPoly& f, const UPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd: both inputs zero");
    UPoly a = f, b = g;
    while (!b.is_zero()) {
        UPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Yun square-free decomposition: f = c * prod factor_i^mult_i with the
// factors monic, square-free and pairwise coprime.
inline std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<UPoly, int>> out;
    if (f.degree() == 0) return out;
    const UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = divrem(f, a).first;
    UPoly c = divrem(fp, a).first;
    UPoly d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        UPoly t = gcd(b, d);
        if (t.degree() > 0) out.emplace_back(t, mult);
        b = divrem(b, t).first;
        c = divrem(d, t).first;
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

// Monic product of the square-free factors of odd multiplicity; its real
// roots are exactly the odd-multiplicity real roots of f.
inline UPoly odd_part(const UPoly& f) {
    if (f.is_zero()) throw std::domain_error("odd_part: zero polynomial");
    UPoly out = UPoly::constant(QNum(1));
    for (const auto& [factor, mult] : squarefree_decomposition(f))
        if (mult % 2 == 1) out = out * factor;
    return out;
}

}  // namespace abelsign
