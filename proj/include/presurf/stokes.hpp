#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "presurf/differentiate.hpp"
#include "presurf/fourier.hpp"
#include "presurf/grid.hpp"
#include "presurf/rayleigh.hpp"
#include "presurf/shear.hpp"
#include "presurf/spline.hpp"

namespace presurf {

/// Bed pressure for periodic waves, prescribed order by order as Fourier
/// coefficients (density-normalized, m^2/s^2).
struct PeriodicPressure {
    FourierCoefficients b1;
    FourierCoefficients b2;

    static PeriodicPressure cosine(double b) {
        return PeriodicPressure{FourierCoefficients::cosine(b), FourierCoefficients(0)};
    }
};

namespace stokes {

/// Coefficients with modulus below this fraction of the largest one are
/// treated as zero; amplifying a noise-floor mode through cosh-type growth
/// would only inject garbage into the sum.
inline constexpr double mode_floor = 1e-15;

inline Grid1D period_grid(double k, std::size_t x_points = 256) {
    const double period = 2.0 * std::numbers::pi / k;
    return Grid1D(0.0, period / static_cast<double>(x_points), x_points);
}

namespace detail {

/// Real output assembled from a complex Fourier sum; throws NonRealOutput if
/// the imaginary residue exceeds 1e-12 of the real amplitude.
inline SampledFunction take_real_part(const Grid1D& grid,
                                      const std::vector<std::complex<double>>& sum,
                                      const std::string& what) {
    double max_re = 0.0, max_im = 0.0;
    for (const auto& v : sum) {
        max_re = std::max(max_re, std::abs(v.real()));
        max_im = std::max(max_im, std::abs(v.imag()));
    }
    if (max_im > 1e-12 * std::max(max_re, 1e-300))
        throw NonRealOutput(what + ": imaginary residue " + std::to_string(max_im) +
                            " exceeds 1e-12 of the amplitude");
    std::vector<double> out(sum.size());
    for (std::size_t i = 0; i < sum.size(); ++i) out[i] = sum[i].real();
    return SampledFunction(grid, std::move(out));
}

/// Unit-slope homogeneous Cauchy solutions per |n|, shared across modes.
class UnitSolutions {
public:
    UnitSolutions(const ShearProfile& profile, const WaveParameters& params, const Grid1D& grid)
        : profile_(profile), params_(params), grid_(grid) {}

    const RayleighSolution& mode(int abs_n) {
        auto it = cache_.find(abs_n);
        if (it == cache_.end())
            it = cache_
                     .emplace(abs_n, rayleigh::solve_cauchy(profile_, params_, abs_n, 1.0,
                                                            nullptr, &grid_))
                     .first;
        return it->second;
    }

private:
    const ShearProfile& profile_;
    WaveParameters params_;
    Grid1D grid_;
    std::map<int, RayleighSolution> cache_;
};

}  // namespace detail

/// First-order surface elevation over one period. Each Fourier mode n of the
/// bed pressure drives a Cauchy problem for the Rayleigh equation with
/// initial slope n k b_{1n} / (U(0) - c); the surface trace of those modal
/// solutions is assembled into g eta_1.
inline SampledFunction reconstruct_eta1(const ShearProfile& profile,
                                        const WaveParameters& params,
                                        const PeriodicPressure& pressure,
                                        std::size_t x_points = 256,
                                        std::size_t y_steps = 2000) {
    rayleigh::require_supercritical(profile, params.c);
    pressure.b1.require_conjugate_symmetric(1e-12, "reconstruct_eta1");

    const Grid1D xgrid = period_grid(params.k, x_points);
    const Grid1D ygrid = rayleigh::default_y_grid(params.h0, y_steps);
    const ShearEval bed = profile.eval(0.0);
    const ShearEval top = profile.eval(params.h0);
    const double floor = mode_floor * pressure.b1.max_abs();

    detail::UnitSolutions units(profile, params, ygrid);
    std::vector<std::complex<double>> sum(xgrid.count, pressure.b1.coeff(0));

    for (int n = -pressure.b1.max_mode; n <= pressure.b1.max_mode; ++n) {
        if (n == 0) continue;
        const std::complex<double> bn = pressure.b1.coeff(n);
        if (std::abs(bn) <= floor) continue;
        const double kn = static_cast<double>(n) * params.k;
        const RayleighSolution& unit = units.mode(std::abs(n));
        const std::complex<double> slope = kn * bn / (bed.u - params.c);
        const std::complex<double> surface =
            slope * ((top.u - params.c) * unit.dphi.values.back() -
                     top.du * unit.phi.values.back()) /
            kn;
        for (std::size_t i = 0; i < xgrid.count; ++i) {
            const double angle = kn * xgrid.coordinate(i);
            sum[i] += surface * std::complex<double>(std::cos(angle), std::sin(angle));
        }
    }

    SampledFunction g_eta = detail::take_real_part(xgrid, sum, "reconstruct_eta1");
    for (double& v : g_eta.values) v /= params.g;
    return g_eta;
}

/// Interior fields of the cosine first-order wave p_1(x,0) = b cos(kx):
///   u_1 = phi'(y) cos(kx)/k, v_1 = phi(y) sin(kx),
///   p_1 = ((c-U) phi' + U' phi) cos(kx)/k,
/// with phi the Cauchy solution of slope k b / (c - U(0)).
class StokesFirstOrderFields {
public:
    StokesFirstOrderFields(const ShearProfile& profile, const WaveParameters& params, double b)
        : profile_(profile), params_(params) {
        rayleigh::require_supercritical(profile, params.c);
        const double slope = params.k * b / (params.c - profile.eval(0.0).u);
        solution_ = rayleigh::solve_cauchy(profile, params, 1, slope);
        phi_.emplace(CubicSpline::from(solution_.phi));
        dphi_.emplace(CubicSpline::from(solution_.dphi));
    }

    double u1(double x, double y) const {
        return dphi_->value(y) * std::cos(params_.k * x) / params_.k;
    }
    double v1(double x, double y) const { return phi_->value(y) * std::sin(params_.k * x); }
    double p1(double x, double y) const {
        const ShearEval s = profile_.eval(y);
        return ((params_.c - s.u) * dphi_->value(y) + s.du * phi_->value(y)) *
               std::cos(params_.k * x) / params_.k;
    }

    const RayleighSolution& modal_solution() const { return solution_; }

private:
    ShearProfile profile_;
    WaveParameters params_;
    RayleighSolution solution_;
    std::optional<CubicSpline> phi_;
    std::optional<CubicSpline> dphi_;
};

inline StokesFirstOrderFields first_order_fields_cosine(const ShearProfile& profile,
                                                        const WaveParameters& params,
                                                        double b) {
    return StokesFirstOrderFields(profile, params, b);
}

namespace detail {

/// Everything the second-order problem shares between modes: the first-order
/// solution phi, the Wronskian-like combination W = phi phi'' - (phi')^2 and
/// the forced / homogeneous n = 2 solutions.
struct SecondOrderContext {
    RayleighSolution phi1;
    SampledFunction w;       // W(y)
    RayleighSolution base2;  // forcing -W'/4, slope -W(0)/4 / (U(0)-c)
    RayleighSolution hom2;   // unit slope, homogeneous
    double bed_offset;       // U(0) - c
};

inline SecondOrderContext prepare_second_order(const ShearProfile& profile,
                                               const WaveParameters& params, double b,
                                               std::size_t y_steps = 2000) {
    rayleigh::require_supercritical(profile, params.c);
    if (std::abs(params.k - 1.0) > 1e-12)
        throw InvalidInput(
            "second-order Stokes reconstruction works in the scaled frame k = 1; rescale x "
            "and h0 first");

    SecondOrderContext ctx;
    const Grid1D ygrid = rayleigh::default_y_grid(params.h0, y_steps);
    const ShearEval bed = profile.eval(0.0);
    ctx.bed_offset = bed.u - params.c;
    ctx.phi1 =
        rayleigh::solve_cauchy(profile, params, 1, b / (params.c - bed.u), nullptr, &ygrid);

    // phi'' is substituted from the Rayleigh equation itself, so no third
    // derivative of U is ever needed.
    const Grid1D& grid = ctx.phi1.phi.grid;
    std::vector<double> w(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) {
        const double y = grid.coordinate(i);
        const ShearEval s = profile.eval(y);
        const double phi = ctx.phi1.phi[i];
        const double dphi = ctx.phi1.dphi[i];
        const double ddphi = (params.k * params.k + s.ddu / (s.u - params.c)) * phi;
        w[i] = phi * ddphi - dphi * dphi;
    }
    ctx.w = SampledFunction(grid, std::move(w));

    const SampledFunction dw = fd_derivative(ctx.w, 1);
    SampledFunction forcing(grid, std::vector<double>(grid.count));
    for (std::size_t i = 0; i < grid.count; ++i) forcing[i] = -0.25 * dw[i];

    const double base_slope = -0.25 * ctx.w.values.front() / ctx.bed_offset;
    ctx.base2 = rayleigh::solve_cauchy(profile, params, 2, base_slope, &forcing, &ygrid);
    ctx.hom2 = rayleigh::solve_cauchy(profile, params, 2, 1.0, nullptr, &ygrid);
    return ctx;
}

}  // namespace detail

/// Complex-valued sample pair (re, im) on the shared y-grid.
struct ComplexProfileSamples {
    SampledFunction re;
    SampledFunction im;
};

/// Modal solution phi_{2n} of the second-order problem driven by the cosine
/// first-order input b and second-order bed coefficients b2. Only n = +-2
/// feels the quadratic forcing; every other nonzero mode is the homogeneous
/// solution scaled by its initial slope n b_{2n} / (U(0) - c).
inline ComplexProfileSamples second_order_mode(const ShearProfile& profile,
                                               const WaveParameters& params, double b,
                                               const FourierCoefficients& b2, int n,
                                               std::size_t y_steps = 2000) {
    const auto ctx = detail::prepare_second_order(profile, params, b, y_steps);
    const Grid1D& grid = ctx.phi1.phi.grid;
    std::vector<double> re(grid.count, 0.0), im(grid.count, 0.0);

    if (n == 2 || n == -2) {
        const double sign = (n > 0) ? 1.0 : -1.0;
        const std::complex<double> extra =
            sign * 2.0 * b2.coeff(n) / ctx.bed_offset;
        for (std::size_t i = 0; i < grid.count; ++i) {
            const std::complex<double> v =
                sign * ctx.base2.phi[i] + extra * ctx.hom2.phi[i];
            re[i] = v.real();
            im[i] = v.imag();
        }
    } else if (n != 0) {
        const std::complex<double> slope =
            static_cast<double>(n) * b2.coeff(n) / ctx.bed_offset;
        const Grid1D ygrid = rayleigh::default_y_grid(params.h0, y_steps);
        const RayleighSolution unit =
            rayleigh::solve_cauchy(profile, params, std::abs(n), 1.0, nullptr, &ygrid);
        for (std::size_t i = 0; i < grid.count; ++i) {
            const std::complex<double> v = slope * unit.phi[i];
            re[i] = v.real();
            im[i] = v.imag();
        }
    }
    return {SampledFunction(grid, std::move(re)), SampledFunction(grid, std::move(im))};
}

/// Second-order surface elevation for cosine first-order input b cos(x) and
/// general second-order bed coefficients b2:
///   g eta_2 = -phi^2(h0)/2 + W(h0) cos(2x)/4 + b_{20}
///             + sum_{n != 0} ((U-c) phi_{2n}' - U' phi_{2n})(h0) e^{inx}/n.
inline SampledFunction reconstruct_eta2(const ShearProfile& profile,
                                        const WaveParameters& params, double b,
                                        const PeriodicPressure& pressure2,
                                        std::size_t x_points = 256,
                                        std::size_t y_steps = 2000) {
    pressure2.b2.require_conjugate_symmetric(1e-12, "reconstruct_eta2");
    const auto ctx = detail::prepare_second_order(profile, params, b, y_steps);

    const Grid1D xgrid = period_grid(params.k, x_points);
    const ShearEval top = profile.eval(params.h0);
    const double c = params.c;
    const double phi_h = ctx.phi1.phi.values.back();
    const double w_h = ctx.w.values.back();
    const double floor = mode_floor * pressure2.b2.max_abs();

    const double constant = -0.5 * phi_h * phi_h + pressure2.b2.coeff(0).real();
    std::vector<std::complex<double>> sum(xgrid.count, constant);
    for (std::size_t i = 0; i < xgrid.count; ++i)
        sum[i] += 0.25 * w_h * std::cos(2.0 * xgrid.coordinate(i));

    detail::UnitSolutions units(profile, params,
                                rayleigh::default_y_grid(params.h0, y_steps));
    const int max_mode = std::max(2, pressure2.b2.max_mode);
    for (int n = -max_mode; n <= max_mode; ++n) {
        if (n == 0) continue;
        std::complex<double> phi_top, dphi_top;
        if (n == 2 || n == -2) {
            const double sign = (n > 0) ? 1.0 : -1.0;
            const std::complex<double> extra = sign * 2.0 * pressure2.b2.coeff(n) / ctx.bed_offset;
            phi_top = sign * ctx.base2.phi.values.back() + extra * ctx.hom2.phi.values.back();
            dphi_top = sign * ctx.base2.dphi.values.back() + extra * ctx.hom2.dphi.values.back();
        } else {
            const std::complex<double> bn = pressure2.b2.coeff(n);
            if (std::abs(bn) <= floor) continue;
            const std::complex<double> slope = static_cast<double>(n) * bn / ctx.bed_offset;
            const RayleighSolution& unit = units.mode(std::abs(n));
            phi_top = slope * unit.phi.values.back();
            dphi_top = slope * unit.dphi.values.back();
        }
        const std::complex<double> surface =
            ((top.u - c) * dphi_top - top.du * phi_top) / static_cast<double>(n);
        for (std::size_t i = 0; i < xgrid.count; ++i) {
            const double angle = static_cast<double>(n) * xgrid.coordinate(i);
            sum[i] += surface * std::complex<double>(std::cos(angle), std::sin(angle));
        }
    }

    SampledFunction g_eta = detail::take_real_part(xgrid, sum, "reconstruct_eta2");
    for (double& v : g_eta.values) v /= params.g;
    return g_eta;
}

/// Pressure at depth y0 predicted from a surface trace via the transfer
/// relation p(x, y0) = ((c-U) phi' + U' phi)(y0) eta(x), where phi solves the
/// boundary-value problem phi(0) = 0, phi(h0) = c - U(h0). The BVP is solved
/// by rescaling the unit-slope Cauchy solution.
inline SampledFunction transfer_pressure_from_eta(const ShearProfile& profile,
                                                  const WaveParameters& params,
                                                  const SampledFunction& eta, double y0 = 0.0) {
    rayleigh::require_supercritical(profile, params.c);
    const RayleighSolution unit = rayleigh::solve_cauchy(profile, params, 1, 1.0);
    const double phi_h = unit.phi.values.back();
    if (std::abs(phi_h) <= 1e-12 * unit.phi.max_abs())
        throw DegenerateBVP("unit-slope Cauchy solution vanishes at h0; cannot rescale");
    const double scale = (params.c - profile.eval(params.h0).u) / phi_h;

    const CubicSpline phi_s = CubicSpline::from(unit.phi);
    const CubicSpline dphi_s = CubicSpline::from(unit.dphi);
    const ShearEval s = profile.eval(y0);
    const double factor =
        (params.c - s.u) * scale * dphi_s.value(y0) + s.du * scale * phi_s.value(y0);

    std::vector<double> p(eta.size());
    for (std::size_t i = 0; i < eta.size(); ++i) p[i] = factor * eta[i];
    return SampledFunction(eta.grid, std::move(p));
}

enum class BaselineVariant { hydrostatic, cosh_transfer };

/// Classical single-trace baselines: eta = p/g pointwise, or the transfer
/// function that multiplies each Fourier mode of wavenumber kappa by
/// cosh(kappa h0)/g.
inline SampledFunction baseline_eta(const SampledFunction& pressure_trace, double g, double h0,
                                    BaselineVariant variant) {
    if (variant == BaselineVariant::hydrostatic) {
        std::vector<double> v(pressure_trace.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = pressure_trace[i] / g;
        return SampledFunction(pressure_trace.grid, std::move(v));
    }
    const std::size_t n = pressure_trace.size();
    const double period = pressure_trace.grid.step * static_cast<double>(n);
    auto coeff = fourier::forward(pressure_trace.values);
    double scale = 0.0;
    for (const auto& v : coeff) scale = std::max(scale, std::abs(v));
    for (std::size_t m = 0; m < n; ++m) {
        // cosh amplification of bins at the DFT noise floor would swamp the
        // signal; treat them as empty
        if (std::abs(coeff[m]) <= mode_floor * scale) {
            coeff[m] = 0.0;
            continue;
        }
        const double kappa = 2.0 * std::numbers::pi * fourier::signed_mode(m, n) / period;
        coeff[m] *= std::cosh(kappa * h0) / g;
    }
    return SampledFunction(pressure_trace.grid, fourier::inverse_real(coeff));
}

/// Per-order elevations plus the assembled surface h0 + eps eta1 + eps^2 eta2.
struct StokesReconstruction {
    SampledFunction eta1;
    SampledFunction eta2;
    SampledFunction surface;
    WaveParameters params;
};

/// Full reconstruction at the requested order (1 or 2). Order 2 requires the
/// first-order input to be the cosine case; its amplitude is read off the
/// +-1 coefficients.
inline StokesReconstruction reconstruct(const ShearProfile& profile,
                                        const WaveParameters& params,
                                        const PeriodicPressure& pressure, int order,
                                        std::size_t x_points = 256,
                                        std::size_t y_steps = 2000) {
    if (order != 1 && order != 2) throw InvalidInput("stokes order must be 1 or 2");

    StokesReconstruction out;
    out.params = params;
    out.eta1 = reconstruct_eta1(profile, params, pressure, x_points, y_steps);

    if (order == 2) {
        const double scale = pressure.b1.max_abs();
        for (int n = -pressure.b1.max_mode; n <= pressure.b1.max_mode; ++n) {
            const std::complex<double> bn = pressure.b1.coeff(n);
            if (std::abs(n) == 1) {
                if (std::abs(bn.imag()) > 1e-10 * scale)
                    throw InvalidInput(
                        "order 2 requires cosine first-order pressure (even in x)");
            } else if (std::abs(bn) > 1e-10 * scale) {
                throw InvalidInput(
                    "order 2 requires the first-order pressure to be a pure cosine; found "
                    "mode n = " +
                    std::to_string(n));
            }
        }
        const double b = 2.0 * pressure.b1.coeff(1).real();
        out.eta2 = reconstruct_eta2(profile, params, b, pressure, x_points, y_steps);
    } else {
        out.eta2 = SampledFunction::zeros(out.eta1.grid);
    }

    std::vector<double> h(out.eta1.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        h[i] = params.h0 + params.eps * out.eta1[i] +
               params.eps * params.eps * out.eta2[i];
    out.surface = SampledFunction(out.eta1.grid, std::move(h));
    return out;
}

}  // namespace stokes
}  // namespace presurf
