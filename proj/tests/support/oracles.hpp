// Test-only oracles, kept independent of the library's computation paths:
// a Sylvester-matrix resultant (the library uses a subresultant PRS) and
// random polynomial factories with known factorizations.
#pragma once

#include "abelsign/quantities.hpp"

#include <random>
#include <vector>

namespace testsupport {

using abelsign::QNum;
using abelsign::Rational;
using abelsign::UPoly;

// Brute-force resultant: determinant of the (m+n)x(m+n) Sylvester matrix.
inline QNum sylvester_resultant(const UPoly& f, const UPoly& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 1 || n < 1) throw std::invalid_argument("sylvester_resultant: need degrees >= 1");
    const int size = m + n;
    std::vector<std::vector<QNum>> mat(static_cast<std::size_t>(size),
                                       std::vector<QNum>(static_cast<std::size_t>(size), QNum(0)));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k)
            mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = f.coeff(m - k);
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k)
            mat[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + k)] =
                g.coeff(n - k);
    return abelsign::exact_determinant(std::move(mat));
}

inline Rational rand_rational(std::mt19937_64& rng, long long max_abs = 9) {
    static constexpr long long dens[] = {1, 1, 2, 3, 4};
    const long long num =
        static_cast<long long>(rng() % static_cast<unsigned long long>(2 * max_abs + 1)) - max_abs;
    return Rational(num, dens[rng() % 5]);
}

inline QNum rand_qnum(std::mt19937_64& rng) { return QNum(rand_rational(rng)); }

// A linear factor (x - r) with a small rational root.
inline UPoly linear_factor(std::mt19937_64& rng, Rational* root = nullptr) {
    const Rational r = rand_rational(rng, 5);
    if (root) *root = r;
    return UPoly({QNum(-r), QNum(1)});
}

// A monic quadratic with no real roots.
inline UPoly pos_quadratic(std::mt19937_64& rng) {
    const Rational b = rand_rational(rng, 3);
    // x^2 + b x + c with c > b^2/4
    const Rational c = b * b / 4 + Rational(1 + static_cast<long long>(rng() % 5), 2);
    return UPoly({QNum(c), QNum(b), QNum(1)});
}

struct PlantedPoly {
    UPoly poly;
    std::vector<std::pair<Rational, int>> real_roots;       // root, multiplicity
    std::vector<std::pair<UPoly, int>> factors;             // monic irreducible, multiplicity
    int irreducible_quadratics = 0;

    // what squarefree_decomposition must return: for each multiplicity, the
    // monic product of all planted factors carrying it, ascending in mult
    std::vector<std::pair<UPoly, int>> expected_squarefree() const {
        std::vector<std::pair<UPoly, int>> out;
        int max_mult = 0;
        for (const auto& [f, m] : factors) max_mult = std::max(max_mult, m);
        for (int m = 1; m <= max_mult; ++m) {
            UPoly prod = UPoly::constant(QNum(1));
            for (const auto& [f, mult] : factors)
                if (mult == m) prod = prod * f;
            if (prod.degree() > 0) out.emplace_back(prod, m);
        }
        return out;
    }

    UPoly expected_odd_part() const {
        UPoly prod = UPoly::constant(QNum(1));
        for (const auto& [f, m] : factors)
            if (m % 2) prod = prod * f;
        return prod;
    }

    bool has_repeated_factor() const {
        for (const auto& [f, m] : factors)
            if (m >= 2) return true;
        return false;
    }
};

// Product of random linear factors (possibly repeated) and root-free
// quadratics, scaled by a nonzero constant.
inline PlantedPoly planted_poly(std::mt19937_64& rng, int max_linear = 3, int max_quad = 1) {
    PlantedPoly out;
    out.poly = UPoly::constant(QNum(1));
    const auto add_factor = [&out](const UPoly& f, int mult) {
        for (int k = 0; k < mult; ++k) out.poly = out.poly * f;
        for (auto& [g, m] : out.factors)
            if (g == f) {
                m += mult;
                return;
            }
        out.factors.emplace_back(f, mult);
    };
    const int nlin = static_cast<int>(rng() % static_cast<unsigned>(max_linear + 1));
    for (int i = 0; i < nlin; ++i) {
        Rational r;
        const UPoly f = linear_factor(rng, &r);
        const int mult = 1 + static_cast<int>(rng() % 3);
        add_factor(f, mult);
        bool merged = false;
        for (auto& [root, m] : out.real_roots)
            if (root == r) {
                m += mult;
                merged = true;
            }
        if (!merged) out.real_roots.emplace_back(r, mult);
    }
    const int nquad = static_cast<int>(rng() % static_cast<unsigned>(max_quad + 1));
    for (int i = 0; i < nquad; ++i) {
        add_factor(pos_quadratic(rng), 1);
        ++out.irreducible_quadratics;
    }
    Rational scale = rand_rational(rng, 4);
    if (scale == 0) scale = 1;
    out.poly = out.poly * QNum(scale);
    return out;
}

}  // namespace testsupport
