#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "presurf/differentiate.hpp"
#include "presurf/fourier.hpp"
#include "presurf/grid.hpp"

namespace presurf {
namespace reference {

/// State of the implicit zero-vorticity surface solve.
struct ExactSolverState {
    FourierCoefficients q;  ///< modes of c - sqrt(c^2 - 2 p(x,0)), q_0 forced to 0
    SampledFunction eta;
    int iterations = 0;
    double residual = 0.0;
    std::vector<double> residual_history;
};

/// Solves the implicit relation between the bed pressure and the surface of a
/// zero-vorticity periodic wave by fixed-point iteration:
///   R(x)     = sum_{n != 0} q_n cosh(n (h0 + eta(x))) e^{inx},
///   eta_next = (c^2 - (c - R)^2 (1 + eta_x^2)) / (2g),
/// with eta_x taken spectrally from the previous iterate and eta^0 the
/// hydrostatic baseline p/g. The zeroth Fourier mode is excluded from the
/// sum. The trace c - sqrt(c^2 - 2p) is a near-cancellation of two c-sized
/// numbers, so its DFT bins sit on a noise floor of order eps_machine * c;
/// modes below that floor (or below 1e-15 of the largest coefficient) are
/// dropped, since cosh(n h0) would amplify them into garbage.
inline ExactSolverState exact_zero_vorticity_solve(const SampledFunction& pressure_trace,
                                                   double c, double h0, double g,
                                                   double tol = 1e-12, int max_iter = 50,
                                                   double relax = 1.0) {
    const std::size_t m = pressure_trace.size();
    for (double p : pressure_trace.values)
        if (!(c * c - 2.0 * p > 0.0))
            throw BranchViolation("c^2 - 2p <= 0 somewhere on the trace; the square root "
                                  "branch is not defined");

    std::vector<double> f(m);
    for (std::size_t j = 0; j < m; ++j)
        f[j] = c - std::sqrt(c * c - 2.0 * pressure_trace[j]);

    ExactSolverState state;
    state.q = FourierCoefficients::from_trace(SampledFunction(pressure_trace.grid, f));
    state.q.at(0) = 0.0;

    const double noise_floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(c);
    const double floor = std::max(1e-15 * state.q.max_abs(), noise_floor);
    std::vector<int> modes;
    for (int n = -state.q.max_mode; n <= state.q.max_mode; ++n)
        if (n != 0 && std::abs(state.q.coeff(n)) > floor) modes.push_back(n);

    // eta^0: hydrostatic baseline
    std::vector<double> eta(m);
    for (std::size_t j = 0; j < m; ++j) eta[j] = pressure_trace[j] / g;

    for (int iter = 0; iter < max_iter; ++iter) {
        const SampledFunction eta_sf(pressure_trace.grid, eta);
        const SampledFunction eta_x = differentiate(eta_sf, 1, DerivativeMode::periodic);

        double update = 0.0;
        std::vector<double> next(m);
        for (std::size_t j = 0; j < m; ++j) {
            const double x = pressure_trace.grid.coordinate(j);
            std::complex<double> r(0.0, 0.0);
            for (int n : modes) {
                const double arg = static_cast<double>(n) * (h0 + eta[j]);
                r += state.q.coeff(n) * std::cosh(arg) *
                     std::complex<double>(std::cos(n * x), std::sin(n * x));
            }
            const double cr = c - r.real();
            const double target =
                (c * c - cr * cr * (1.0 + eta_x[j] * eta_x[j])) / (2.0 * g);
            next[j] = eta[j] + relax * (target - eta[j]);
            if (!std::isfinite(next[j]))
                throw NoConvergence("fixed-point iteration diverged at iteration " +
                                    std::to_string(iter + 1));
            update = std::max(update, std::abs(next[j] - eta[j]));
        }
        eta = std::move(next);
        state.residual_history.push_back(update);
        state.residual = update;
        state.iterations = iter + 1;
        if (update <= tol) {
            state.eta = SampledFunction(pressure_trace.grid, std::move(eta));
            return state;
        }
    }
    throw NoConvergence("fixed-point iteration did not reach tol = " + std::to_string(tol) +
                        " within " + std::to_string(max_iter) +
                        " iterations (amplitude too large for the map?)");
}

}  // namespace reference
}  // namespace presurf
