// Resultants via the subresultant pseudo-remainder sequence, and the
// sign-normalized discriminant built on top of it.
//
// Conventions, pinned by tests:
//   res(x-2, x-3) = -1,  res(x^2+1, x) = 1  (Sylvester matrix, f-rows first)
//   res(c, g) = c^deg(g) for nonzero constant c;  res(0, g) = 0
//   disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f), so a real cubic has three
//   distinct real roots iff disc > 0 and exactly one iff disc < 0.
#pragma once

#include "abelsign/upoly.hpp"

namespace abelsign {

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + prem(f,g).
inline UPoly pseudo_rem(const UPoly& f, const UPoly& g) {
    if (g.is_zero()) throw std::domain_error("pseudo_rem: zero divisor");
    int e = f.degree() - g.degree() + 1;
    UPoly r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        r = r * g.lc() - UPoly::monomial(r.lc(), r.degree() - g.degree()) * g;
        --e;
    }
    QNum scale(1);
    for (; e > 0; --e) scale *= g.lc();
    return r * scale;
}

inline QNum qnum_pow(const QNum& x, int e) {
    QNum acc(1), b = x;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc *= b;
        if (e > 1) b *= b;
    }
    return acc;
}

inline QNum resultant(const UPoly& f, const UPoly& g) {
    if (f.is_zero() || g.is_zero()) return QNum(0);
    if (f.degree() == 0) return qnum_pow(f.lc(), g.degree());
    if (g.degree() == 0) return qnum_pow(g.lc(), f.degree());
    if (f.degree() < g.degree()) {
        const QNum r = resultant(g, f);
        return (f.degree() * g.degree()) % 2 ? -r : r;
    }
    UPoly a = f, b = g;
    QNum gc(1), h(1);
    int s = 1;
    while (true) {
        const int d = a.degree(), e = b.degree();
        const int delta = d - e;
        if ((d % 2) && (e % 2)) s = -s;
        UPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = r * (QNum(1) / (gc * qnum_pow(h, delta)));
        gc = a.lc();
        h = delta == 0 ? h : qnum_pow(gc, delta) / qnum_pow(h, delta - 1);
        if (b.is_zero()) return QNum(0);  // positive-degree common factor
        if (b.degree() == 0) {
            const int dp = a.degree();
            const QNum tail = qnum_pow(b.lc(), dp) / qnum_pow(h, dp - 1);
            return s == 1 ? tail : -tail;
        }
    }
}

inline QNum discriminant(const UPoly& f) {
    const int n = f.degree();
    if (n < 2) throw std::domain_error("discriminant: degree must be at least 2");
    const QNum r = resultant(f, f.derivative());
    const QNum d = r / f.lc();
    return (n * (n - 1) / 2) % 2 ? -d : d;
}

}  // namespace abelsign
