// The named exact quantities attached to a parameter point:
//   R1, R2            res(p1,p3) = R1*R2 for the generic (cubic/cubic) case
//   D1, D3, D1p, D3p  discriminants of p1, p3, p1', p3'
//   R113 = res(p1',p3), R133 = res(p1,p3')
//   r1 = rem(p1,p1'), r3 = rem(p3,p3'), Rbar113 = res(r1,p3), Rbar133 = res(p1,r3)
// All of them are "generic case" objects; whenever a degree condition fails
// the field is reported undefined with the failed precondition, except the
// barred resultants which degrade via res(c,g) = c^deg g, res(0,g) = 0.
#pragma once

#include "abelsign/model.hpp"
#include "abelsign/resultant.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace abelsign {

inline QNum compute_R1(const Params& p) {
    const QNum u = QNum(4) * p.a2() + p.a5();
    const QNum v = QNum(3) * p.a3() + p.a4() + p.a6();
    return u * u + v * v;
}

// Closed form of res(p1,p3)/R1. The sign is fixed so that the factorization
// res(p1,p3) = R1*R2 holds exactly under the Sylvester convention used by
// resultant(); only the zero set of R2 enters the classification.
inline QNum compute_R2(const Params& p) {
    const QNum l0 = QNum(2) * p.a3() + p.a4();
    const QNum l1 = QNum(2) * p.a2() + p.a5();
    const QNum l2 = p.a3() + p.a6();
    const QNum l3 = p.a3() - p.a6();
    return -(p.a3() * p.a6() * l0 * l0 + p.a2() * l0 * l1 * l2 +
             p.a2() * p.a2() * (l1 + l3) * (l1 - l3));
}

// Exact determinant by Gaussian elimination over the coefficient field.
inline QNum exact_determinant(std::vector<std::vector<QNum>> m) {
    const std::size_t n = m.size();
    QNum det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return QNum(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            const QNum factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
        }
    }
    return det;
}

// res(p1,p3) with both polynomials taken as formal cubics (the generic-case
// object; leading coefficients may vanish at special points).
inline QNum generic_res_p1_p3(const Params& p) {
    const UPoly f = build_p1(p), g = build_p3(p);
    std::vector<std::vector<QNum>> m(6, std::vector<QNum>(6, QNum(0)));
    for (int row = 0; row < 3; ++row)
        for (int k = 0; k <= 3; ++k) {
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = f.coeff(3 - k);
            m[static_cast<std::size_t>(row + 3)][static_cast<std::size_t>(row + k)] = g.coeff(3 - k);
        }
    return exact_determinant(std::move(m));
}

struct InvariantBundle {
    int deg_p1 = kZeroPolyDegree;
    int deg_p3 = kZeroPolyDegree;
    QNum R1, R2;
    std::optional<QNum> D1, D3, D1p, D3p, R113, R133, Rbar113, Rbar133;
    std::optional<UPoly> r1, r3;
    QNum res_p1p3_generic;
    bool res_factorization_ok = false;
    std::map<std::string, std::string> undefined_reasons;
    std::vector<std::string> degenerate_notes;
};

inline InvariantBundle compute_bundle(const Params& p) {
    InvariantBundle b;
    const UPoly f1 = build_p1(p), f3 = build_p3(p);
    b.deg_p1 = f1.degree();
    b.deg_p3 = f3.degree();
    b.R1 = compute_R1(p);
    b.R2 = compute_R2(p);
    b.res_p1p3_generic = generic_res_p1_p3(p);
    b.res_factorization_ok = (b.res_p1p3_generic == b.R1 * b.R2);

    const auto undef = [&b](const char* name, const char* why) {
        b.undefined_reasons.emplace(name, why);
    };

    if (f1.degree() >= 2)
        b.D1 = discriminant(f1);
    else
        undef("D1", "deg p1 < 2");
    if (f3.degree() >= 2)
        b.D3 = discriminant(f3);
    else
        undef("D3", "deg p3 < 2");

    const UPoly d1 = f1.derivative(), d3 = f3.derivative();
    if (d1.degree() >= 2)
        b.D1p = discriminant(d1);
    else
        undef("D1p", "deg p1' < 2");
    if (d3.degree() >= 2)
        b.D3p = discriminant(d3);
    else
        undef("D3p", "deg p3' < 2");

    if (!d1.is_zero() && !f3.is_zero()) {
        b.R113 = resultant(d1, f3);
        if (d1.degree() == 0) b.degenerate_notes.push_back("R113: p1' is constant");
    } else {
        undef("R113", d1.is_zero() ? "p1' = 0" : "p3 = 0");
    }
    if (!d3.is_zero() && !f1.is_zero()) {
        b.R133 = resultant(f1, d3);
        if (d3.degree() == 0) b.degenerate_notes.push_back("R133: p3' is constant");
    } else {
        undef("R133", d3.is_zero() ? "p3' = 0" : "p1 = 0");
    }

    if (!d1.is_zero()) {
        b.r1 = divrem(f1, d1).second;
        if (!f3.is_zero()) {
            b.Rbar113 = resultant(*b.r1, f3);  // res(0,g) = 0, res(c,g) = c^deg g
            if (b.r1->degree() < 1)
                b.degenerate_notes.push_back("Rbar113: r1 is constant or zero");
        } else {
            undef("Rbar113", "p3 = 0");
        }
    } else {
        undef("r1", "p1' = 0");
        undef("Rbar113", "p1' = 0");
    }
    if (!d3.is_zero()) {
        b.r3 = divrem(f3, d3).second;
        if (!f1.is_zero()) {
            b.Rbar133 = resultant(f1, *b.r3);
            if (b.r3->degree() < 1)
                b.degenerate_notes.push_back("Rbar133: r3 is constant or zero");
        } else {
            undef("Rbar133", "p1 = 0");
        }
    } else {
        undef("r3", "p3' = 0");
        undef("Rbar133", "p3' = 0");
    }
    return b;
}

struct FactorizationWitness {
    bool ok = false;
    bool generic_degrees = false;  // deg p1 == deg p3 == 3
    QNum res;                      // generic-case res(p1,p3)
    QNum r1_times_r2;
};

inline FactorizationWitness verify_res_factorization(const Params& p) {
    FactorizationWitness w;
    w.generic_degrees = build_p1(p).degree() == 3 && build_p3(p).degree() == 3;
    w.res = generic_res_p1_p3(p);
    w.r1_times_r2 = compute_R1(p) * compute_R2(p);
    w.ok = (w.res == w.r1_times_r2);
    return w;
}

}  // namespace abelsign
