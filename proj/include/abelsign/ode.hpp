// Adaptive Dormand-Prince 5(4) integrator for scalar ODEs, with blow-up
// detection: Abel solutions can escape in finite time, so the stepper
// reports an escape outcome instead of forcing integration to the end.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

namespace abelsign {

struct OdeResult {
    bool escaped = false;
    double value = 0.0;      // y(t1) when !escaped
    double escape_t = 0.0;   // where |y| crossed the threshold
    long long steps = 0;
};

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-13;
    double escape_abs = 1e6;
    long long max_steps = 2000000;
};

// One accepted-step observer: observe(t, y) after every accepted step
// (including the initial state). Used for along-the-orbit diagnostics.
template <typename F, typename Observer>
OdeResult integrate_dopri5(F&& f, double t0, double t1, double y0, const OdeOptions& opt,
                           Observer&& observe) {
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640,
                            e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

    OdeResult res;
    double t = t0, y = y0;
    const double span = t1 - t0;
    double h = span / 100.0;
    double k1 = f(t, y);
    observe(t, y);
    while (t < t1) {
        if (res.steps++ > opt.max_steps || h < 1e-14 * span) {
            res.escaped = true;  // squeezed against a finite-time blow-up
            res.escape_t = t;
            return res;
        }
        h = std::min(h, t1 - t);
        const double k2 = f(t + c2 * h, y + h * a21 * k1);
        const double k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        const double k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const double k5 = f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const double k6 =
            f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const double ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const double k7 = f(t + h, ynew);
        const double err =
            std::fabs(h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
        const double tol = opt.atol + opt.rtol * std::max(std::fabs(y), std::fabs(ynew));
        if (err <= tol) {
            t += h;
            y = ynew;
            k1 = k7;  // first-same-as-last
            observe(t, y);
            if (std::fabs(y) > opt.escape_abs) {
                res.escaped = true;
                res.escape_t = t;
                return res;
            }
        }
        const double factor = err > 0 ? 0.9 * std::pow(tol / err, 0.2) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
    }
    res.value = y;
    return res;
}

template <typename F>
OdeResult integrate_dopri5(F&& f, double t0, double t1, double y0,
                           const OdeOptions& opt = {}) {
    return integrate_dopri5(std::forward<F>(f), t0, t1, y0, opt, [](double, double) {});
}

}  // namespace abelsign
