// The modeled objects of one parameter point: the trigonometric coefficient
// vectors of f and g, the tan-substitution polynomials p1, p2, p3, q, and
// double-precision evaluation of the Abel coefficients
//
//   A(theta) = g(theta) * (a1 g(theta) - f(theta))
//   B(theta) = f(theta) - 2 a1 g(theta) - g'(theta)
//
// for the planar system
//   x' = a1 x - y - a3 x^2 + (2 a2 + a5) x y + a6 y^2
//   y' = x + a1 y + a2 x^2 + (2 a3 + a4) x y - a2 y^2.
#pragma once

#include "abelsign/qnum.hpp"
#include "abelsign/upoly.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace abelsign {

// One parameter point (a1..a6); all six share a single radicand d.
struct Params {
    std::array<QNum, 6> a;

    Params() = default;
    Params(QNum a1, QNum a2, QNum a3, QNum a4, QNum a5, QNum a6)
        : a{std::move(a1), std::move(a2), std::move(a3),
            std::move(a4), std::move(a5), std::move(a6)} {
        radicand();  // validates compatibility
    }

    const QNum& a1() const { return a[0]; }
    const QNum& a2() const { return a[1]; }
    const QNum& a3() const { return a[2]; }
    const QNum& a4() const { return a[3]; }
    const QNum& a5() const { return a[4]; }
    const QNum& a6() const { return a[5]; }

    std::int64_t radicand() const {
        std::int64_t d = 1;
        for (const auto& v : a) {
            if (v.is_rational()) continue;
            if (d == 1) {
                d = v.d();
            } else if (d != v.d()) {
                throw std::invalid_argument("Params: coordinates mix radicands");
            }
        }
        return d;
    }

    friend bool operator==(const Params& x, const Params& y) { return x.a == y.a; }
};

// Coefficients of cos^3, cos^2 sin, cos sin^2, sin^3 for f and g.
struct TrigCoeffs {
    std::array<QNum, 4> f, g;
};

inline TrigCoeffs trig_coeffs(const Params& p) {
    const QNum &a2 = p.a2(), &a3 = p.a3(), &a4 = p.a4(), &a5 = p.a5(), &a6 = p.a6();
    TrigCoeffs t;
    t.f = {-a3, QNum(3) * a2 + a5, QNum(2) * a3 + a4 + a6, -a2};
    t.g = {a2, QNum(3) * a3 + a4, -(QNum(3) * a2 + a5), -a6};
    return t;
}

// g' in the same homogeneous cubic basis.
inline std::array<QNum, 4> trig_derivative(const std::array<QNum, 4>& c) {
    return {c[1], QNum(2) * c[2] - QNum(3) * c[0], QNum(3) * c[3] - QNum(2) * c[1], -c[2]};
}

inline UPoly build_p1(const Params& p) {
    const auto t = trig_coeffs(p);
    return UPoly({t.g[0], t.g[1], t.g[2], t.g[3]});
}

inline UPoly build_p2(const Params& p) {
    const auto t = trig_coeffs(p);
    return UPoly({t.f[0], t.f[1], t.f[2], t.f[3]});
}

inline UPoly build_p3(const Params& p) {
    return build_p1(p) * p.a1() - build_p2(p);
}

inline UPoly build_q(const Params& p) {
    const QNum &a1 = p.a1(), &a2 = p.a2(), &a3 = p.a3();
    const QNum &a4 = p.a4(), &a5 = p.a5(), &a6 = p.a6();
    return UPoly({-(QNum(2) * a1 * a2 + QNum(4) * a3 + a4),
                  QNum(12) * a2 + QNum(3) * a5 - a1 * (QNum(6) * a3 + QNum(2) * a4),
                  QNum(8) * a3 + QNum(3) * a4 + QNum(4) * a6 + a1 * (QNum(6) * a2 + QNum(2) * a5),
                  -(QNum(4) * a2 + a5 - QNum(2) * a1 * a6)});
}

namespace detail {

inline double eval_trig_cubic(const std::array<QNum, 4>& c, double theta) {
    const double co = std::cos(theta), si = std::sin(theta);
    return c[0].to_double() * co * co * co + c[1].to_double() * co * co * si +
           c[2].to_double() * co * si * si + c[3].to_double() * si * si * si;
}

}  // namespace detail

inline double eval_A(const Params& p, double theta) {
    const auto t = trig_coeffs(p);
    const double f = detail::eval_trig_cubic(t.f, theta);
    const double g = detail::eval_trig_cubic(t.g, theta);
    return g * (p.a1().to_double() * g - f);
}

inline double eval_B(const Params& p, double theta) {
    const auto t = trig_coeffs(p);
    const double f = detail::eval_trig_cubic(t.f, theta);
    const double g = detail::eval_trig_cubic(t.g, theta);
    const double gp = detail::eval_trig_cubic(trig_derivative(t.g), theta);
    return f - 2.0 * p.a1().to_double() * g - gp;
}

}  // namespace abelsign
