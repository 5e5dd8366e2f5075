#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "presurf/fourier.hpp"
#include "presurf/grid.hpp"

namespace presurf {

enum class DerivativeMode {
    periodic,  ///< grid covers one period, right endpoint excluded
    decaying,  ///< trace vanishes at both ends; samples beyond the grid are 0
};

namespace detail {

/// Exact differentiation of the discrete Fourier interpolant. For even N the
/// Nyquist mode is zeroed on odd derivative orders.
inline std::vector<double> spectral_derivative(const SampledFunction& f, int order) {
    const std::size_t n = f.size();
    const double period = f.grid.step * static_cast<double>(n);
    const double k0 = 2.0 * std::numbers::pi / period;
    const std::complex<double> im(0.0, 1.0);

    auto coeff = fourier::forward(f.values);
    for (std::size_t m = 0; m < n; ++m) {
        const bool nyquist = (n % 2 == 0) && (m == n / 2);
        std::complex<double> factor = 1.0;
        if (nyquist && order % 2 == 1) {
            factor = 0.0;
        } else {
            const double mode = fourier::signed_mode(m, n);
            for (int p = 0; p < order; ++p) factor *= im * (mode * k0);
        }
        coeff[m] *= factor;
    }
    return fourier::inverse_real(coeff);
}

/// 4th-order central stencils applied with zero extension beyond the ends.
inline std::vector<double> decaying_derivative(const SampledFunction& f, int order) {
    const std::size_t n = f.size();
    const double h = f.grid.step;
    const auto at = [&](std::ptrdiff_t j) -> double {
        return (j >= 0 && j < static_cast<std::ptrdiff_t>(n)) ? f[static_cast<std::size_t>(j)]
                                                              : 0.0;
    };

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto j = static_cast<std::ptrdiff_t>(i);
        double v = 0.0;
        switch (order) {
            case 1:
                v = (at(j - 2) - 8.0 * at(j - 1) + 8.0 * at(j + 1) - at(j + 2)) / (12.0 * h);
                break;
            case 2:
                v = (-at(j - 2) + 16.0 * at(j - 1) - 30.0 * at(j) + 16.0 * at(j + 1) -
                     at(j + 2)) /
                    (12.0 * h * h);
                break;
            case 3:
                v = (at(j - 3) - 8.0 * at(j - 2) + 13.0 * at(j - 1) - 13.0 * at(j + 1) +
                     8.0 * at(j + 2) - at(j + 3)) /
                    (8.0 * h * h * h);
                break;
            case 4:
                v = (-at(j - 3) + 12.0 * at(j - 2) - 39.0 * at(j - 1) + 56.0 * at(j) -
                     39.0 * at(j + 1) + 12.0 * at(j + 2) - at(j + 3)) /
                    (6.0 * h * h * h * h);
                break;
            default:
                throw InvalidInput("differentiate: order must be 1..4");
        }
        out[i] = v;
    }
    return out;
}

}  // namespace detail

/// Checks that both end samples sit below decay_tol relative to the trace
/// maximum. A zero trace passes trivially.
inline void require_decay(const SampledFunction& f, double decay_tol,
                          const std::string& what = "trace") {
    const double m = f.max_abs();
    if (m == 0.0) return;
    const double lo = std::abs(f.values.front());
    const double hi = std::abs(f.values.back());
    if (lo > decay_tol * m || hi > decay_tol * m)
        throw DecayViolation(what + " end values exceed decay tolerance " +
                             std::to_string(decay_tol) + " relative to the maximum");
}

/// Derivative of order 1..4 on a uniform grid. Periodic mode differentiates
/// the discrete Fourier interpolant exactly; decaying mode uses 4th-order
/// central finite differences with zero extension, after checking decay.
inline SampledFunction differentiate(const SampledFunction& f, int order, DerivativeMode mode,
                                     double decay_tol = 1e-10) {
    if (order < 1 || order > 4) throw InvalidInput("differentiate: order must be 1..4");
    if (f.size() < 7) throw GridTooSmall("differentiate requires at least 7 nodes");
    if (mode == DerivativeMode::periodic)
        return SampledFunction(f.grid, detail::spectral_derivative(f, order));
    require_decay(f, decay_tol);
    return SampledFunction(f.grid, detail::decaying_derivative(f, order));
}

/// 4th-order first or second derivative on a non-periodic grid (one-sided
/// stencils at the boundaries). Used for y-profiles on [0, h0].
inline SampledFunction fd_derivative(const SampledFunction& f, int order) {
    const std::size_t n = f.size();
    if (n < 6) throw GridTooSmall("fd_derivative requires at least 6 nodes");
    const double h = f.grid.step;
    std::vector<double> out(n);

    if (order == 1) {
        const double s = 12.0 * h;
        out[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / s;
        out[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / s;
        for (std::size_t i = 2; i + 2 < n; ++i)
            out[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / s;
        out[n - 2] =
            (-f[n - 5] + 6.0 * f[n - 4] - 18.0 * f[n - 3] + 10.0 * f[n - 2] + 3.0 * f[n - 1]) / s;
        out[n - 1] = (3.0 * f[n - 5] - 16.0 * f[n - 4] + 36.0 * f[n - 3] - 48.0 * f[n - 2] +
                      25.0 * f[n - 1]) /
                     s;
    } else if (order == 2) {
        const double s = 12.0 * h * h;
        out[0] = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] -
                  10.0 * f[5]) /
                 s;
        out[1] =
            (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]) / s;
        for (std::size_t i = 2; i + 2 < n; ++i)
            out[i] =
                (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / s;
        out[n - 2] = (f[n - 6] - 6.0 * f[n - 5] + 14.0 * f[n - 4] - 4.0 * f[n - 3] -
                      15.0 * f[n - 2] + 10.0 * f[n - 1]) /
                     s;
        out[n - 1] = (-10.0 * f[n - 6] + 61.0 * f[n - 5] - 156.0 * f[n - 4] + 214.0 * f[n - 3] -
                      154.0 * f[n - 2] + 45.0 * f[n - 1]) /
                     s;
    } else {
        throw InvalidInput("fd_derivative: order must be 1 or 2");
    }
    return SampledFunction(f.grid, std::move(out));
}

}  // namespace presurf
