// Poincare return map of the Abel equation rho' = A rho^3 + B rho^2 + a1 rho
// over [0, 2pi], and a fixed-point scan counting positive limit cycles.
#pragma once

#include "abelsign/model.hpp"
#include "abelsign/ode.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace abelsign {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Double-precision right-hand side of the Abel equation for one point.
class AbelField {
  public:
    explicit AbelField(const Params& p) : a1_(p.a1().to_double()) {
        const auto t = trig_coeffs(p);
        const auto gp = trig_derivative(t.g);
        for (int i = 0; i < 4; ++i) {
            const auto k = static_cast<std::size_t>(i);
            fc_[k] = t.f[k].to_double();
            gc_[k] = t.g[k].to_double();
            gpc_[k] = gp[k].to_double();
        }
    }

    double A(double theta) const {
        const double f = basis(fc_, theta), g = basis(gc_, theta);
        return g * (a1_ * g - f);
    }
    double B(double theta) const {
        return basis(fc_, theta) - 2.0 * a1_ * basis(gc_, theta) - basis(gpc_, theta);
    }
    double g(double theta) const { return basis(gc_, theta); }
    double a1() const { return a1_; }

    double rhs(double theta, double rho) const {
        const double f = basis(fc_, theta), g = basis(gc_, theta);
        const double A = g * (a1_ * g - f);
        const double B = f - 2.0 * a1_ * g - basis(gpc_, theta);
        return ((A * rho + B) * rho + a1_) * rho;
    }

  private:
    static double basis(const double c[4], double theta) {
        const double co = std::cos(theta), si = std::sin(theta);
        return co * co * (c[0] * co + c[1] * si) + si * si * (c[2] * co + c[3] * si);
    }

    double fc_[4], gc_[4], gpc_[4];
    double a1_;
};

struct ReturnMapOutcome {
    bool escaped = false;
    double value = 0.0;        // rho(2pi)
    double escape_theta = 0.0;
    double min_polar_margin = 0.0;  // min over the orbit of 1 - g(theta) rho(theta)
};

struct ReturnMapOptions {
    double rtol = 1e-10;
    double escape_abs = 1e6;
};

inline ReturnMapOutcome return_map(const Params& p, double rho0,
                                   const ReturnMapOptions& opt = {}) {
    if (!(rho0 > 0)) throw std::invalid_argument("return_map: rho0 must be positive");
    const AbelField field(p);
    OdeOptions ode;
    ode.rtol = opt.rtol;
    // rho = 0 is invariant, so solutions from small rho0 stay small: scale
    // the absolute floor with rho0 to keep the error control relative
    ode.atol = 1e-13 * std::min(1.0, rho0);
    ode.escape_abs = opt.escape_abs;
    ReturnMapOutcome out;
    double margin = 1.0;
    const OdeResult r = integrate_dopri5(
        [&field](double th, double rho) { return field.rhs(th, rho); }, 0.0, kTwoPi, rho0, ode,
        [&field, &margin](double th, double rho) {
            margin = std::min(margin, 1.0 - field.g(th) * rho);
        });
    out.escaped = r.escaped;
    out.value = r.value;
    out.escape_theta = r.escape_t;
    out.min_polar_margin = margin;
    return out;
}

struct FixedPoint {
    double rho0 = 0.0;
    double residual = 0.0;          // P(rho0) - rho0 after refinement
    bool polar_valid = false;       // 1 - g(theta) rho(theta) > 0 along the orbit
    double min_polar_margin = 0.0;
};

struct Escape {
    double rho0 = 0.0;
    double escape_theta = 0.0;
};

struct ReturnMapReport {
    std::vector<FixedPoint> fixed_points;
    bool center_detected = false;
    std::vector<Escape> escapes;
    double rho_max = 0.0;
    int grid = 0;
    std::string integrator = "dopri5(4) adaptive";
    double tolerance = 0.0;
};

// Scans a geometric rho0 grid in (0, rho_max], brackets sign changes of
// P(rho0) - rho0 between adjacent non-escaping samples and refines them by
// bisection to |P(rho)-rho| < 1e-10 max(1, rho). A center is reported when
// at least 95% of the non-escaping samples are fixed to 1e-9 relative
// accuracy; fixed-point reporting and center detection exclude each other.
inline ReturnMapReport count_limit_cycles(const Params& p, double rho_max = 10.0, int n = 512,
                                          const ReturnMapOptions& opt = {}) {
    if (!(rho_max > 0)) throw std::invalid_argument("count_limit_cycles: rho_max <= 0");
    if (n < 64) throw std::invalid_argument("count_limit_cycles: grid must be >= 64");
    ReturnMapReport rep;
    rep.rho_max = rho_max;
    rep.grid = n;
    rep.tolerance = opt.rtol;

    const double rho_min = rho_max * 1e-4;
    const double ratio = std::pow(rho_max / rho_min, 1.0 / (n - 1));
    std::vector<double> grid(static_cast<std::size_t>(n));
    std::vector<ReturnMapOutcome> vals(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        grid[k] = rho_min * std::pow(ratio, i);
        vals[k] = return_map(p, grid[k], opt);
        if (vals[k].escaped) rep.escapes.push_back({grid[k], vals[k].escape_theta});
    }

    int alive = 0, fixed_like = 0;
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (vals[k].escaped) continue;
        ++alive;
        if (std::fabs(vals[k].value - grid[k]) < 1e-9 * grid[k]) ++fixed_like;
    }
    if (alive >= 16 && 20 * fixed_like >= 19 * alive) {
        rep.center_detected = true;
        return rep;
    }

    const auto refine = [&](double lo, double hi, double flo) {
        double best_rho = lo, best_res = flo;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const ReturnMapOutcome m = return_map(p, mid, opt);
            if (m.escaped) break;
            const double fm = m.value - mid;
            if (std::fabs(fm) < std::fabs(best_res)) {
                best_rho = mid;
                best_res = fm;
            }
            if (std::fabs(fm) < 1e-10 * std::max(1.0, mid)) break;
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        const ReturnMapOutcome orbit = return_map(p, best_rho, opt);
        FixedPoint fp;
        fp.rho0 = best_rho;
        fp.residual = best_res;
        fp.min_polar_margin = orbit.min_polar_margin;
        fp.polar_valid = orbit.min_polar_margin > 0;
        rep.fixed_points.push_back(fp);
    };

    for (int i = 0; i + 1 < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (vals[k].escaped || vals[k + 1].escaped) continue;
        const double f0 = vals[k].value - grid[k];
        const double f1 = vals[k + 1].value - grid[k + 1];
        if (f0 == 0.0) {  // landed exactly on a fixed point
            FixedPoint fp;
            fp.rho0 = grid[k];
            fp.min_polar_margin = vals[k].min_polar_margin;
            fp.polar_valid = fp.min_polar_margin > 0;
            rep.fixed_points.push_back(fp);
            continue;
        }
        if ((f0 < 0) != (f1 < 0)) refine(grid[k], grid[k + 1], f0);
    }
    return rep;
}

}  // namespace abelsign
