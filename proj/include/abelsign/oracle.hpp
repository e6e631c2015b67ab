// Sign-definiteness of A decided straight from the root-coincidence
// characterization: with neither p1 nor p3 identically null, p1*p3 has
// definite sign iff the odd-multiplicity real roots of p1 and p3 coincide.
// This is the ground truth the case classifier is validated against.
#pragma once

#include "abelsign/model.hpp"
#include "abelsign/sturm.hpp"

#include <cassert>
#include <cmath>
#include <vector>

namespace abelsign {

enum class OracleReason { p1_null, p3_null, odd_roots_coincide, odd_roots_differ };

inline const char* to_string(OracleReason r) {
    switch (r) {
        case OracleReason::p1_null: return "p1-null";
        case OracleReason::p3_null: return "p3-null";
        case OracleReason::odd_roots_coincide: return "odd-roots-coincide";
        case OracleReason::odd_roots_differ: return "odd-roots-differ";
    }
    return "?";
}

struct OracleVerdict {
    bool definite = false;
    OracleReason reason = OracleReason::odd_roots_differ;
    UPoly odd1, odd3, common;    // square-free odd parts and their gcd
    int roots1 = 0, roots3 = 0, roots_common = 0;
};

// The odd parts are square-free, so equality of the real-root sets of odd1
// and odd3 is equivalent to both having as many real roots as their gcd.
inline OracleVerdict decide_definite(const Params& p) {
    OracleVerdict v;
    const UPoly f1 = build_p1(p), f3 = build_p3(p);
    if (f1.is_zero()) {
        v.definite = true;
        v.reason = OracleReason::p1_null;
        return v;
    }
    if (f3.is_zero()) {
        v.definite = true;
        v.reason = OracleReason::p3_null;
        return v;
    }
    v.odd1 = odd_part(f1);
    v.odd3 = odd_part(f3);
    // the count-through-gcd argument needs square-free odd parts
    assert(v.odd1.degree() < 1 || gcd(v.odd1, v.odd1.derivative()).degree() == 0);
    assert(v.odd3.degree() < 1 || gcd(v.odd3, v.odd3.derivative()).degree() == 0);
    v.common = gcd(v.odd1, v.odd3);
    v.roots1 = sturm_count(v.odd1);
    v.roots3 = sturm_count(v.odd3);
    v.roots_common = v.common.degree() >= 1 ? sturm_count(v.common) : 0;
    v.definite = (v.roots1 == v.roots_common) && (v.roots3 == v.roots_common);
    v.reason = v.definite ? OracleReason::odd_roots_coincide : OracleReason::odd_roots_differ;
    return v;
}

enum class ScanResult { non_negative, non_positive, sign_change, numerically_zero };

inline const char* to_string(ScanResult r) {
    switch (r) {
        case ScanResult::non_negative: return "non-negative";
        case ScanResult::non_positive: return "non-positive";
        case ScanResult::sign_change: return "sign-change";
        case ScanResult::numerically_zero: return "numerically-zero";
    }
    return "?";
}

struct ScanReport {
    ScanResult kind = ScanResult::numerically_zero;
    double min_value = 0, max_value = 0, scale = 0;
    int grid = 0;
};

// Samples A on a uniform grid over [0, pi) (A is pi-periodic) and classifies
// with relative tolerance 1e-9 against the sample's max magnitude.
inline ScanReport numeric_sign_scan(const Params& p, int grid = 4096) {
    if (grid < 16) throw std::invalid_argument("numeric_sign_scan: grid must be >= 16");
    ScanReport r;
    r.grid = grid;
    const auto t = trig_coeffs(p);
    double fc[4], gc[4];
    for (int i = 0; i < 4; ++i) {
        fc[i] = t.f[static_cast<std::size_t>(i)].to_double();
        gc[i] = t.g[static_cast<std::size_t>(i)].to_double();
    }
    const double a1 = p.a1().to_double();
    double mn = 0, mx = 0;
    constexpr double kPi = 3.14159265358979323846;
    for (int i = 0; i < grid; ++i) {
        const double th = kPi * i / grid;
        const double co = std::cos(th), si = std::sin(th);
        const double b0 = co * co * co, b1 = co * co * si, b2 = co * si * si, b3 = si * si * si;
        const double f = fc[0] * b0 + fc[1] * b1 + fc[2] * b2 + fc[3] * b3;
        const double g = gc[0] * b0 + gc[1] * b1 + gc[2] * b2 + gc[3] * b3;
        const double A = g * (a1 * g - f);
        mn = std::min(mn, A);
        mx = std::max(mx, A);
    }
    r.min_value = mn;
    r.max_value = mx;
    r.scale = std::max(std::fabs(mn), std::fabs(mx));
    // When A is identically zero the samples are pure cancellation noise;
    // anything below the evaluation's rounding floor counts as zero.
    double mag_f = 0, mag_g = 0;
    for (int i = 0; i < 4; ++i) {
        mag_f += std::fabs(fc[i]);
        mag_g += std::fabs(gc[i]);
    }
    const double noise_floor = 1e-13 * mag_g * (std::fabs(a1) * mag_g + mag_f);
    const double tol = 1e-9 * r.scale;
    const bool has_pos = mx > tol, has_neg = mn < -tol;
    if (r.scale <= noise_floor || (!has_pos && !has_neg))
        r.kind = ScanResult::numerically_zero;
    else if (has_pos && has_neg)
        r.kind = ScanResult::sign_change;
    else
        r.kind = has_pos ? ScanResult::non_negative : ScanResult::non_positive;
    return r;
}

}  // namespace abelsign
