#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "presurf/grid.hpp"
#include "presurf/ode.hpp"
#include "presurf/quadrature.hpp"
#include "presurf/root_find.hpp"
#include "presurf/shear.hpp"
#include "presurf/spline.hpp"

namespace presurf {

/// Wave data shared across the reconstruction pipelines. SI units; eps is the
/// dimensionless amplitude parameter used when orders are assembled.
struct WaveParameters {
    double g = 9.81;   ///< m/s^2
    double h0 = 1.0;   ///< m
    double k = 1.0;    ///< 1/m
    double c = 0.0;    ///< m/s
    double eps = 1.0;  ///< amplitude parameter < 1
};

/// Solution of one modal Cauchy problem: phi(0) = 0, phi'(0) = slope0.
struct RayleighSolution {
    int mode = 0;
    SampledFunction phi;
    SampledFunction dphi;
    double slope0 = 0.0;
};

namespace rayleigh {

inline Grid1D default_y_grid(double h0, std::size_t steps = 2000) {
    return Grid1D::over(0.0, h0, steps + 1);
}

inline void require_supercritical(const ShearProfile& profile, double c) {
    const double umax = profile.max_velocity();
    if (!(c > umax))
        throw SupercriticalityViolation("wave speed c = " + std::to_string(c) +
                                        " does not exceed max U = " + std::to_string(umax));
}

/// Integrates (U-c)(phi'' - (nk)^2 phi) - U'' phi = F as
/// phi'' = ((nk)^2 + U''/(U-c)) phi + F/(U-c) with phi(0) = 0,
/// phi'(0) = slope0. The optional forcing is interpolated with a cubic spline
/// so RK4 can evaluate it at half steps.
inline RayleighSolution solve_cauchy(const ShearProfile& profile, const WaveParameters& params,
                                     int n, double slope0,
                                     const SampledFunction* forcing = nullptr,
                                     const Grid1D* y_grid = nullptr) {
    require_supercritical(profile, params.c);
    const Grid1D grid = y_grid ? *y_grid : default_y_grid(params.h0);

    std::optional<CubicSpline> forcing_spline;
    if (forcing) forcing_spline.emplace(CubicSpline::from(*forcing));

    const double kn = static_cast<double>(n) * params.k;
    const double c = params.c;
    const auto rhs = [&](double y) {
        const ShearEval s = profile.eval(y);
        const double denom = s.u - c;
        const double a = kn * kn + s.ddu / denom;
        const double f = forcing_spline ? forcing_spline->value(y) / denom : 0.0;
        return std::pair<double, double>{a, f};
    };

    IvpSolution sol = integrate_second_order_ivp(rhs, 0.0, slope0, grid);
    return RayleighSolution{n, std::move(sol.phi), std::move(sol.dphi), slope0};
}

struct BifurcationResult {
    double c = 0.0;
    /// More than one sign change of the surface mismatch was seen in the
    /// bracket; the smallest root is returned.
    bool multiple_roots = false;
};

inline std::pair<double, double> default_bracket(const ShearProfile& profile, double g,
                                                 double h0) {
    const double umax = profile.max_velocity();
    const double scale = std::sqrt(g * h0);
    return {umax + 0.01 * scale, umax + 10.0 * scale};
}

namespace detail {

/// Root of mismatch(c) on the bracket: scans for sign changes, solves the
/// first one, and flags any further ones.
template <class F>
BifurcationResult first_root_in_bracket(F&& mismatch, std::pair<double, double> bracket,
                                        double tol) {
    const int scan = 32;
    double prev_c = bracket.first;
    double prev_f = mismatch(prev_c);
    if (prev_f == 0.0) return {prev_c, false};

    std::optional<std::pair<double, double>> first;
    int changes = 0;
    for (int i = 1; i <= scan; ++i) {
        const double c = bracket.first + (bracket.second - bracket.first) * i / scan;
        const double f = mismatch(c);
        if (prev_f * f <= 0.0) {
            ++changes;
            if (!first) first = {prev_c, c};
        }
        prev_c = c;
        prev_f = f;
    }
    if (!first)
        throw NoSignChange("surface condition mismatch has no sign change over the bracket [" +
                           std::to_string(bracket.first) + ", " +
                           std::to_string(bracket.second) + "]");
    const double root = find_root(mismatch, first->first, first->second, tol);
    return {root, changes > 1};
}

}  // namespace detail

/// Wave speed at which the linearized problem admits a nontrivial 2*pi/k
/// periodic mode: shoots the unit-slope Cauchy problem and finds the c where
/// the free-surface condition
///   phi'(h0) = (g/(U(h0)-c)^2 + U'(h0)/(U(h0)-c)) phi(h0)
/// is met.
inline BifurcationResult bifurcation_speed(const ShearProfile& profile, double g, double h0,
                                           double k, std::pair<double, double> bracket,
                                           double tol = 1e-12) {
    if (!(bracket.first > profile.max_velocity()))
        throw SupercriticalityViolation("bifurcation bracket must lie above max U");
    const auto mismatch = [&](double c) {
        WaveParameters params{g, h0, k, c, 1.0};
        const RayleighSolution sol = solve_cauchy(profile, params, 1, 1.0);
        const ShearEval s = profile.eval(h0);
        const double denom = s.u - c;
        return sol.dphi.values.back() -
               (g / (denom * denom) + s.du / denom) * sol.phi.values.back();
    };
    return detail::first_root_in_bracket(mismatch, bracket, tol);
}

inline BifurcationResult bifurcation_speed(const ShearProfile& profile, double g, double h0,
                                           double k) {
    return bifurcation_speed(profile, g, h0, k, default_bracket(profile, g, h0));
}

/// c^2 = g tanh(k h0) / k.
inline double dispersion_zero(double g, double h0, double k) {
    return std::sqrt(g * std::tanh(k * h0) / k);
}

/// Constant vorticity U(y) = gamma y. Solving the unit-mode surface condition
/// with phi = sinh(ky) gives, with T = tanh(k h0),
///   c = gamma h0 - gamma T / (2k) + sqrt(gamma^2 T^2 / (4k^2) + g T / k);
/// the branch with the minus sign in front of the radical violates c > max U
/// and is discarded. The gamma h0 shift is the surface drift U(h0); without
/// it the k->0 limit would not reach the Burns critical speed.
inline double dispersion_constant_vorticity(double gamma, double g, double h0, double k) {
    const double t = std::tanh(k * h0);
    return gamma * h0 - gamma * t / (2.0 * k) +
           std::sqrt(gamma * gamma * t * t / (4.0 * k * k) + g * t / k);
}

/// Closed-form critical speeds for the analytic profiles. Zero shear gives
/// sqrt(g h0); U = gamma y reduces the condition to c^2 - gamma h0 c - g h0 = 0.
inline double burns_zero(double g, double h0) { return std::sqrt(g * h0); }

inline double burns_constant_vorticity(double gamma, double g, double h0) {
    return 0.5 * (gamma * h0 + std::sqrt(gamma * gamma * h0 * h0 + 4.0 * g * h0));
}

/// Critical speed for solitary waves: the c > max U solving
/// int_0^{h0} dy/(U-c)^2 = 1/g.
inline double burns_speed(const ShearProfile& profile, double g,
                          std::pair<double, double> bracket, double tol = 1e-12,
                          std::size_t y_steps = 2000) {
    if (!(bracket.first > profile.max_velocity()))
        throw SupercriticalityViolation("Burns bracket must lie above max U");
    const Grid1D grid = default_y_grid(profile.h0(), y_steps);
    const auto condition = [&](double c) {
        const SampledFunction integrand = SampledFunction::from(grid, [&](double y) {
            const double denom = profile.eval(y).u - c;
            return 1.0 / (denom * denom);
        });
        return simpson(integrand) - 1.0 / g;
    };
    return find_root(condition, bracket.first, bracket.second, tol);
}

inline double burns_speed(const ShearProfile& profile, double g) {
    return burns_speed(profile, g, default_bracket(profile, g, profile.h0()));
}

}  // namespace rayleigh
}  // namespace presurf
