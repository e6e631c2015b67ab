// QNum: exact scalar a + b*sqrt(d) over the rationals. d is a square-free
// positive integer; d == 1 encodes a plain rational and forces b == 0.
// Values with different radicands never mix (unless one side is rational):
// arithmetic across two genuine surds with distinct d throws.
#pragma once

#include "abelsign/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace abelsign {

inline bool is_squarefree_radicand(std::int64_t d) {
    if (d < 1) return false;
    if (d == 1) return true;
    auto [s, f] = split_square_part(Int(d));
    return s == 1;
}

class QNum {
  public:
    QNum() : a_(0), b_(0), d_(1) {}
    QNum(int v) : a_(v), b_(0), d_(1) {}  // NOLINT: implicit on purpose
    QNum(long long v) : a_(v), b_(0), d_(1) {}
    QNum(Rational a) : a_(std::move(a)), b_(0), d_(1) {}
    QNum(Rational a, Rational b, std::int64_t d)
        : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (!is_squarefree_radicand(d_))
            throw std::invalid_argument("QNum: radicand must be a square-free positive integer");
        normalize();
    }

    static QNum sqrt_of(std::int64_t d) { return QNum(Rational(0), Rational(1), d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    std::int64_t d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    // Exact sign of a + b*sqrt(d): when a and b disagree, compare a^2 vs b^2 d.
    int sign() const {
        const int sa = sign_of(a_), sb = sign_of(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        const Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
        if (lhs == rhs) return 0;  // unreachable for square-free d > 1
        return lhs > rhs ? sa : sb;
    }

    QNum conjugate() const {
        QNum r = *this;
        r.b_ = -r.b_;
        r.normalize();
        return r;
    }

    double to_double() const {
        double v = rat_to_double(a_);
        if (b_ != 0) v += rat_to_double(b_) * std::sqrt(static_cast<double>(d_));
        return v;
    }

    QNum operator-() const {
        QNum r = *this;
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }

    QNum& operator+=(const QNum& o) {
        const std::int64_t d = common_radicand(*this, o);
        a_ += o.a_;
        b_ += o.b_;
        d_ = d;
        normalize();
        return *this;
    }
    QNum& operator-=(const QNum& o) { return *this += -o; }

    QNum& operator*=(const QNum& o) {
        const std::int64_t d = common_radicand(*this, o);
        const Rational na = a_ * o.a_ + b_ * o.b_ * d;
        const Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = na;
        b_ = nb;
        d_ = d;
        normalize();
        return *this;
    }

    QNum& operator/=(const QNum& o) {
        if (o.is_zero()) throw std::domain_error("QNum: division by zero");
        const std::int64_t d = common_radicand(*this, o);
        const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * d;
        // norm == 0 would force sqrt(d) rational; impossible for square-free d > 1
        const Rational na = (a_ * o.a_ - b_ * o.b_ * d) / norm;
        const Rational nb = (b_ * o.a_ - a_ * o.b_) / norm;
        a_ = na;
        b_ = nb;
        d_ = d;
        normalize();
        return *this;
    }

    friend QNum operator+(QNum x, const QNum& y) { return x += y; }
    friend QNum operator-(QNum x, const QNum& y) { return x -= y; }
    friend QNum operator*(QNum x, const QNum& y) { return x *= y; }
    friend QNum operator/(QNum x, const QNum& y) { return x /= y; }

    friend bool operator==(const QNum& x, const QNum& y) {
        if (x.a_ != y.a_) return false;
        if (x.b_ == 0 && y.b_ == 0) return true;
        return x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QNum& x, const QNum& y) { return !(x == y); }

    // Textual form: "p", "p/q", optionally followed by +/- "r/s*sqrt(d)".
    std::string str() const {
        std::string s = rat_str(a_);
        if (b_ != 0) {
            s += sign_of(b_) < 0 ? '-' : '+';
            s += rat_str(rat_abs(b_));
            s += "*sqrt(";
            s += std::to_string(d_);
            s += ')';
        }
        return s;
    }

    static QNum parse(std::string_view text);

  private:
    void normalize() {
        if (d_ == 1) {  // sqrt(1) = 1: fold the surd part into the rational one
            a_ += b_;
            b_ = 0;
        }
        if (b_ == 0) d_ = 1;
    }

    static std::int64_t common_radicand(const QNum& x, const QNum& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_)
            throw std::invalid_argument("QNum: mixed radicands " + std::to_string(x.d_) +
                                        " and " + std::to_string(y.d_));
        return x.d_;
    }

    Rational a_, b_;
    std::int64_t d_;
};

inline int qnum_sign(const QNum& x) { return x.sign(); }

namespace detail {

inline Rational parse_rational_token(std::string_view s, std::size_t& pos) {
    const std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    const std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits)
        throw std::invalid_argument("QNum: expected integer at position " +
                                    std::to_string(start));
    Int num(std::string(s.substr(digits, pos - digits)));
    Int den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        const std::size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw std::invalid_argument("QNum: expected denominator");
        den = Int(std::string(s.substr(dstart, pos - dstart)));
        if (den == 0) throw std::invalid_argument("QNum: zero denominator");
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

}  // namespace detail

inline QNum QNum::parse(std::string_view text) {
    std::size_t pos = 0;
    const Rational a = detail::parse_rational_token(text, pos);
    if (pos == text.size()) return QNum(a);
    if (text[pos] != '+' && text[pos] != '-')
        throw std::invalid_argument("QNum: expected '+' or '-' before surd part");
    const bool neg = text[pos] == '-';
    ++pos;
    Rational b = detail::parse_rational_token(text, pos);
    if (neg) b = -b;
    constexpr std::string_view kw = "*sqrt(";
    if (text.substr(pos, kw.size()) != kw)
        throw std::invalid_argument("QNum: expected \"*sqrt(\"");
    pos += kw.size();
    const std::size_t dstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == dstart || pos == text.size() || text[pos] != ')')
        throw std::invalid_argument("QNum: malformed radicand");
    const std::int64_t d = std::stoll(std::string(text.substr(dstart, pos - dstart)));
    ++pos;
    if (pos != text.size()) throw std::invalid_argument("QNum: trailing characters");
    if (b == 0) return QNum(a);
    return QNum(a, b, d);
}

}  // namespace abelsign
