// Exact Jacobian ranks of the case-equality systems at a parameter point.
// Each equality polynomial is evaluated with forward-mode dual numbers over
// QNum, giving exact partials d/da_j without transcribed derivative
// formulas; the rank is computed by Gaussian elimination over the field.
#pragma once

#include "abelsign/classifier.hpp"

#include <array>
#include <functional>
#include <vector>

namespace abelsign {

struct DualQ {
    QNum v, d;  // value and derivative w.r.t. the active coordinate

    DualQ() : v(0), d(0) {}
    DualQ(QNum value) : v(std::move(value)), d(0) {}
    DualQ(QNum value, QNum deriv) : v(std::move(value)), d(std::move(deriv)) {}

    friend DualQ operator+(const DualQ& x, const DualQ& y) { return {x.v + y.v, x.d + y.d}; }
    friend DualQ operator-(const DualQ& x, const DualQ& y) { return {x.v - y.v, x.d - y.d}; }
    friend DualQ operator*(const DualQ& x, const DualQ& y) {
        return {x.v * y.v, x.d * y.v + x.v * y.d};
    }
    DualQ operator-() const { return {-v, -d}; }
};

using ParamDuals = std::array<DualQ, 6>;
using EqualityPoly = std::function<DualQ(const ParamDuals&)>;

namespace descriptors {

// p1, p2, p3 coefficient maps (ascending) in dual arithmetic
inline std::array<DualQ, 4> p1_coeffs(const ParamDuals& a) {
    return {a[1], DualQ(QNum(3)) * a[2] + a[3], -(DualQ(QNum(3)) * a[1] + a[4]), -a[5]};
}
inline std::array<DualQ, 4> p2_coeffs(const ParamDuals& a) {
    return {-a[2], DualQ(QNum(3)) * a[1] + a[4],
            DualQ(QNum(2)) * a[2] + a[3] + a[5], -a[1]};
}
inline std::array<DualQ, 4> p3_coeffs(const ParamDuals& a) {
    const auto c1 = p1_coeffs(a), c2 = p2_coeffs(a);
    std::array<DualQ, 4> out;
    for (int i = 0; i < 4; ++i)
        out[static_cast<std::size_t>(i)] =
            a[0] * c1[static_cast<std::size_t>(i)] - c2[static_cast<std::size_t>(i)];
    return out;
}

// res(f, f') for the formal cubic f = c3 x^3 + c2 x^2 + c1 x + c0:
//   -c3 * (18 c3 c2 c1 c0 - 4 c2^3 c0 + c2^2 c1^2 - 4 c3 c1^3 - 27 c3^2 c0^2)
inline DualQ res_cubic_dcubic(const std::array<DualQ, 4>& c) {
    const DualQ &c0 = c[0], &c1 = c[1], &c2 = c[2], &c3 = c[3];
    const DualQ disc = DualQ(QNum(18)) * c3 * c2 * c1 * c0 - DualQ(QNum(4)) * c2 * c2 * c2 * c0 +
                       c2 * c2 * c1 * c1 - DualQ(QNum(4)) * c3 * c1 * c1 * c1 -
                       DualQ(QNum(27)) * c3 * c3 * c0 * c0;
    return -c3 * disc;
}

// res(f, f'') for the formal cubic: -8 c3 (2 c2^3 - 9 c1 c2 c3 + 27 c0 c3^2)
inline DualQ res_cubic_ddcubic(const std::array<DualQ, 4>& c) {
    const DualQ &c0 = c[0], &c1 = c[1], &c2 = c[2], &c3 = c[3];
    return DualQ(QNum(-8)) * c3 *
           (DualQ(QNum(2)) * c2 * c2 * c2 - DualQ(QNum(9)) * c1 * c2 * c3 +
            DualQ(QNum(27)) * c0 * c3 * c3);
}

inline DualQ R2(const ParamDuals& a) {
    const DualQ l0 = DualQ(QNum(2)) * a[2] + a[3];
    const DualQ l1 = DualQ(QNum(2)) * a[1] + a[4];
    const DualQ l2 = a[2] + a[5];
    const DualQ l3 = a[2] - a[5];
    return -(a[2] * a[5] * l0 * l0 + a[1] * l0 * l1 * l2 +
             a[1] * a[1] * (l1 + l3) * (l1 - l3));
}

inline DualQ D1(const ParamDuals& a) { return res_cubic_dcubic(p1_coeffs(a)); }
inline DualQ D3(const ParamDuals& a) { return res_cubic_dcubic(p3_coeffs(a)); }
inline DualQ D1p(const ParamDuals& a) { return res_cubic_ddcubic(p1_coeffs(a)); }
inline DualQ D3p(const ParamDuals& a) { return res_cubic_ddcubic(p3_coeffs(a)); }

}  // namespace descriptors

// The fixed equality systems whose ranks certify the codimension of each
// semi-variety at its sample point.
inline std::vector<EqualityPoly> case_equalities(CaseLabel c) {
    namespace d = descriptors;
    const auto lin = [](QNum k1, QNum k2, QNum k3, QNum k4, QNum k5, QNum k6) {
        return [=](const ParamDuals& a) {
            return DualQ(k1) * a[0] + DualQ(k2) * a[1] + DualQ(k3) * a[2] +
                   DualQ(k4) * a[3] + DualQ(k5) * a[4] + DualQ(k6) * a[5];
        };
    };
    switch (c) {
        case CaseLabel::c1a:
            return {lin(0, 0, 0, 0, 0, 1), lin(0, 0, 0, 0, 1, 0),
                    lin(0, 0, 3, 1, 0, 0), lin(0, 1, 0, 0, 0, 0)};
        case CaseLabel::c1b:
            return {[](const ParamDuals& a) { return a[0] * a[5] - a[1]; },
                    [](const ParamDuals& a) { return a[0] * a[4] - a[2] + a[3] + a[5]; },
                    [](const ParamDuals& a) {
                        return a[0] * (DualQ(QNum(3)) * a[2] + a[3]) - DualQ(QNum(3)) * a[1] - a[4];
                    },
                    [](const ParamDuals& a) { return a[0] * a[1] + a[2]; }};
        case CaseLabel::c2:
            return {lin(0, 0, 0, 0, 0, 1), lin(0, 3, 0, 0, 1, 0), d::R2};
        case CaseLabel::c3a:
            return {[](const ParamDuals& a) { return a[1] - a[0] * a[5]; },
                    [](const ParamDuals& a) {
                        return DualQ(QNum(2)) * a[2] + a[3] +
                               a[0] * (DualQ(QNum(3)) * a[1] + a[4]) + a[5];
                    },
                    d::R2};
        case CaseLabel::c3b:
            return {lin(0, 0, 0, 4, 0, -9), lin(0, 0, 4, 0, 0, 5), lin(0, 9, 0, 0, 1, 0),
                    [](const ParamDuals& a) { return DualQ(QNum(9)) * a[0] * a[5] + a[4]; },
                    [](const ParamDuals& a) {
                        return DualQ(QNum(8)) * a[0] * a[0] - DualQ(QNum(1));
                    }};
        case CaseLabel::c4:
            return {lin(0, 1, 0, 0, 0, 0), lin(0, 0, 0, 0, 0, 1), lin(0, 0, 3, 1, 0, 0)};
        case CaseLabel::c5a:
            return {d::R2};
        case CaseLabel::c5b:
            return {d::R2, d::D1};
        case CaseLabel::c5c:
            return {d::R2, d::D1, d::D1p};
        case CaseLabel::c5d:
            return {d::R2, d::D3};
        case CaseLabel::c5e:
            return {d::R2, d::D3, d::D3p};
        case CaseLabel::c5f:
            return {d::R2, d::D1, d::D3};
        case CaseLabel::c5g:
            return {d::R2, d::D1, d::D1p, d::D3};
        case CaseLabel::c5h:
            return {d::R2, d::D1, d::D3, d::D3p};
        case CaseLabel::B1:
            return {lin(1, 0, 0, 0, 0, 0), lin(0, 4, 0, 0, 1, 0),
                    lin(0, 0, 4, 1, 0, 0), lin(0, 0, 0, 1, 0, 4)};
        case CaseLabel::B2:
            return {lin(0, 0, 0, 0, 0, 1), lin(0, 0, 3, 1, 0, 0), lin(0, 4, 0, 0, 1, 0),
                    [](const ParamDuals& a) {
                        return DualQ(QNum(3)) * a[0] * a[4] + DualQ(QNum(2)) * a[3];
                    }};
    }
    return {};
}

// Exact rank of an m x n QNum matrix.
inline int exact_rank(std::vector<std::vector<QNum>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            const QNum factor = m[r][col] / m[row][col];
            for (std::size_t k = col; k < cols; ++k) m[r][k] -= factor * m[row][k];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Value and gradient of one equality polynomial at a point.
inline std::pair<QNum, std::array<QNum, 6>> eval_with_gradient(const EqualityPoly& f,
                                                               const Params& p) {
    std::array<QNum, 6> grad;
    QNum value(0);
    for (int j = 0; j < 6; ++j) {
        ParamDuals a;
        for (int i = 0; i < 6; ++i)
            a[static_cast<std::size_t>(i)] =
                DualQ(p.a[static_cast<std::size_t>(i)], QNum(i == j ? 1 : 0));
        const DualQ r = f(a);
        grad[static_cast<std::size_t>(j)] = r.d;
        if (j == 0) value = r.v;
    }
    return {value, grad};
}

// Rank of the Jacobian of the given equality polynomials at the point.
inline int jacobian_rank(const std::vector<EqualityPoly>& polys, const Params& p) {
    std::vector<std::vector<QNum>> m;
    m.reserve(polys.size());
    for (const auto& f : polys) {
        const auto [value, grad] = eval_with_gradient(f, p);
        m.emplace_back(grad.begin(), grad.end());
    }
    return m.empty() ? 0 : exact_rank(std::move(m));
}

}  // namespace abelsign
