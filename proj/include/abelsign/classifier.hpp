// Exact membership tests for the semi-varieties on which the Abel
// coefficient A has definite sign (cases 1a..5h) and for the two varieties
// on which B vanishes identically (B1, B2). All equalities and inequalities
// are decided with exact QNum signs; there are no tolerances here.
#pragma once

#include "abelsign/quantities.hpp"
#include "abelsign/sturm.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace abelsign {

enum class CaseLabel {
    c1a, c1b, c2, c3a, c3b, c4,
    c5a, c5b, c5c, c5d, c5e, c5f, c5g, c5h,
    B1, B2,
};

inline const char* to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::c1a: return "1a";
        case CaseLabel::c1b: return "1b";
        case CaseLabel::c2: return "2";
        case CaseLabel::c3a: return "3a";
        case CaseLabel::c3b: return "3b";
        case CaseLabel::c4: return "4";
        case CaseLabel::c5a: return "5a";
        case CaseLabel::c5b: return "5b";
        case CaseLabel::c5c: return "5c";
        case CaseLabel::c5d: return "5d";
        case CaseLabel::c5e: return "5e";
        case CaseLabel::c5f: return "5f";
        case CaseLabel::c5g: return "5g";
        case CaseLabel::c5h: return "5h";
        case CaseLabel::B1: return "B1";
        case CaseLabel::B2: return "B2";
    }
    return "?";
}

inline CaseLabel case_from_string(const std::string& s) {
    static const std::pair<const char*, CaseLabel> table[] = {
        {"1a", CaseLabel::c1a}, {"1b", CaseLabel::c1b}, {"2", CaseLabel::c2},
        {"3a", CaseLabel::c3a}, {"3b", CaseLabel::c3b}, {"4", CaseLabel::c4},
        {"5a", CaseLabel::c5a}, {"5b", CaseLabel::c5b}, {"5c", CaseLabel::c5c},
        {"5d", CaseLabel::c5d}, {"5e", CaseLabel::c5e}, {"5f", CaseLabel::c5f},
        {"5g", CaseLabel::c5g}, {"5h", CaseLabel::c5h}, {"B1", CaseLabel::B1},
        {"B2", CaseLabel::B2}};
    for (const auto& [name, label] : table)
        if (s == name) return label;
    throw std::invalid_argument("unknown case label: " + s);
}

inline bool is_definite_sign_case(CaseLabel c) {
    return c != CaseLabel::B1 && c != CaseLabel::B2;
}

enum class Conclusion { ADefiniteSign, BIdenticallyNull, NotApplicable };

inline const char* to_string(Conclusion c) {
    switch (c) {
        case Conclusion::ADefiniteSign: return "A-definite-sign";
        case Conclusion::BIdenticallyNull: return "B-identically-null";
        case Conclusion::NotApplicable: return "not-applicable";
    }
    return "?";
}

struct CaseVerdict {
    std::vector<CaseLabel> matched;
    InvariantBundle witnesses;
    Conclusion conclusion = Conclusion::NotApplicable;

    bool has(CaseLabel c) const {
        for (auto m : matched)
            if (m == c) return true;
        return false;
    }
};

enum class BVariety { none, B1, B2, both };

namespace detail {

inline bool zero(const QNum& x) { return x.is_zero(); }

}  // namespace detail

// Membership in the first B-vanishing variety: a1 = 4a2+a5 = 4a3+a4 = a4+4a6 = 0.
inline bool in_B1(const Params& p) {
    using detail::zero;
    return zero(p.a1()) && zero(QNum(4) * p.a2() + p.a5()) &&
           zero(QNum(4) * p.a3() + p.a4()) && zero(p.a4() + QNum(4) * p.a6());
}

// Membership in the second: a6 = 3a3+a4 = 4a2+a5 = 3a1a5+2a4 = 0.
inline bool in_B2(const Params& p) {
    using detail::zero;
    return zero(p.a6()) && zero(QNum(3) * p.a3() + p.a4()) &&
           zero(QNum(4) * p.a2() + p.a5()) &&
           zero(QNum(3) * p.a1() * p.a5() + QNum(2) * p.a4());
}

// B has definite sign iff it vanishes identically iff q == 0; membership in
// either variety must force q == 0 exactly (asserted: a failure here would
// falsify the implementation, not the input).
inline BVariety classify_B(const Params& p) {
    const bool b1 = in_B1(p), b2 = in_B2(p);
    if ((b1 || b2) && !build_q(p).is_zero())
        throw std::logic_error("classify_B: variety member with q != 0");
    if (b1 && b2) return BVariety::both;
    if (b1) return BVariety::B1;
    if (b2) return BVariety::B2;
    return BVariety::none;
}

inline CaseVerdict classify(const Params& p) {
    CaseVerdict v;
    v.witnesses = compute_bundle(p);
    const InvariantBundle& b = v.witnesses;
    const QNum &a1 = p.a1(), &a2 = p.a2(), &a3 = p.a3();
    const QNum &a4 = p.a4(), &a5 = p.a5(), &a6 = p.a6();
    using detail::zero;
    const auto match = [&v](CaseLabel c) { v.matched.push_back(c); };

    // 1a: p1 identically null
    if (zero(a6) && zero(a5) && zero(QNum(3) * a3 + a4) && zero(a2)) match(CaseLabel::c1a);
    // 1b: p3 identically null
    if (zero(a1 * a6 - a2) && zero(a1 * a5 - a3 + a4 + a6) &&
        zero(a1 * (QNum(3) * a3 + a4) - QNum(3) * a2 - a5) && zero(a1 * a2 + a3))
        match(CaseLabel::c1b);
    // 2: deg p1 = 1, deg p3 = 3
    if (zero(a6) && zero(QNum(3) * a2 + a5) && !((QNum(3) * a3 + a4) * a2).is_zero() &&
        b.R2.is_zero() &&
        (a2 * a2 - QNum(4) * a3 * a3 - QNum(4) * a1 * a2 * a3).sign() <= 0)
        match(CaseLabel::c2);
    // 3: deg p3 = 1, deg p1 = 3
    if (zero(a2 - a1 * a6) && zero(QNum(2) * a3 + a4 + a1 * (QNum(3) * a2 + a5) + a6) &&
        !(a6 * (QNum(3) * a2 - a1 * (QNum(3) * a3 + a4) + a5)).is_zero()) {
        if (b.R2.is_zero() && b.D1 && b.D1->sign() <= 0 && b.R113 && !b.R113->is_zero())
            match(CaseLabel::c3a);
        if (zero(QNum(4) * a4 - QNum(9) * a6) && zero(QNum(4) * a3 + QNum(5) * a6) &&
            zero(QNum(9) * a2 + a5) && zero(QNum(9) * a1 * a6 + a5) &&
            zero(QNum(8) * a1 * a1 - QNum(1)))
            match(CaseLabel::c3b);
    }
    // 4: deg p1 = deg p3 = 2
    if (zero(a2) && zero(a6) && !(a5 * (a3 - a1 * a5)).is_zero() &&
        zero(QNum(3) * a3 + a4) &&
        (QNum(4) * a3 * a3 - QNum(4) * a1 * a3 * a5 - a5 * a5).sign() >= 0)
        match(CaseLabel::c4);
    // 5: deg p1 = deg p3 = 3, common real root (R2 = 0)
    if (!(a6 * (a2 - a1 * a6)).is_zero() && b.R2.is_zero()) {
        const int s1 = b.D1->sign(), s3 = b.D3->sign();
        const QNum &D1p = *b.D1p, &D3p = *b.D3p;
        const QNum &R113 = *b.R113, &R133 = *b.R133;
        const QNum &Rb113 = *b.Rbar113, &Rb133 = *b.Rbar133;
        if (s1 < 0 && s3 < 0 &&
            !((a3 - a6) * (a2 * a2 + (a4 + QNum(2) * a3) * (a4 + QNum(2) * a3))).is_zero())
            match(CaseLabel::c5a);
        if (s1 == 0 && s3 < 0 && !(D1p * R113).is_zero()) match(CaseLabel::c5b);
        if (s1 == 0 && D1p.is_zero() && s3 < 0) match(CaseLabel::c5c);
        if (s3 == 0 && s1 < 0 && !(D3p * R133).is_zero()) match(CaseLabel::c5d);
        if (s3 == 0 && D3p.is_zero() && s1 < 0) match(CaseLabel::c5e);
        if (s1 == 0 && s3 == 0 && !(D1p * D3p * Rb113 * Rb133).is_zero()) match(CaseLabel::c5f);
        if (s1 == 0 && D1p.is_zero() && s3 == 0 && !Rb133.is_zero()) match(CaseLabel::c5g);
        if (s1 == 0 && s3 == 0 && D3p.is_zero() && !Rb113.is_zero()) match(CaseLabel::c5h);
    }
    if (in_B1(p)) match(CaseLabel::B1);
    if (in_B2(p)) match(CaseLabel::B2);

    bool any_a = false, any_b = false;
    for (auto c : v.matched) (is_definite_sign_case(c) ? any_a : any_b) = true;
    v.conclusion = any_a ? Conclusion::ADefiniteSign
                         : (any_b ? Conclusion::BIdenticallyNull : Conclusion::NotApplicable);
    return v;
}

// Lemma-level predicate: for deg p1 = deg p3 = 3, p1 and p3 have a common
// real root iff R2 = 0.
inline bool p1_p3_share_real_root(const Params& p) {
    const UPoly f1 = build_p1(p), f3 = build_p3(p);
    if (f1.is_zero() || f3.is_zero())
        throw std::domain_error("p1_p3_share_real_root: identically null input");
    const UPoly g = gcd(f1, f3);
    if (g.degree() < 1) return false;
    return sturm_count(g) > 0;
}

// Singular locus of V(R2): a point of V(R2) is singular iff a3 = a6 or
// a2 = 2a3+a4 = 0; at such points the odd-multiplicity real roots of p1 and
// p3 never coincide.
inline bool is_singular_R2_point(const Params& p) {
    if (!compute_R2(p).is_zero())
        throw std::domain_error("is_singular_R2_point: R2 != 0");
    return (p.a3() - p.a6()).is_zero() ||
           (p.a2().is_zero() && (QNum(2) * p.a3() + p.a4()).is_zero());
}

}  // namespace abelsign
