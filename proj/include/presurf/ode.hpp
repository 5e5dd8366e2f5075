#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "presurf/grid.hpp"

namespace presurf {

struct IvpSolution {
    SampledFunction phi;
    SampledFunction dphi;
};

/// Classical fixed-step RK4 for phi'' = A(y) phi + F(y) as the first-order
/// system (phi, phi'). rhs maps y to the pair {A(y), F(y)}. Deterministic for
/// a fixed grid. Throws NonFiniteCoefficient if A or F evaluates to NaN/inf
/// (the usual cause is U - c passing through zero) or if the solution
/// overflows.
template <class Rhs>
IvpSolution integrate_second_order_ivp(Rhs&& rhs, double phi0, double dphi0,
                                       const Grid1D& grid) {
    const std::size_t n = grid.count;
    const double h = grid.step;

    std::vector<double> phi(n), dphi(n);
    phi[0] = phi0;
    dphi[0] = dphi0;

    const auto eval = [&](double y) {
        const std::pair<double, double> af = rhs(y);
        if (!std::isfinite(af.first) || !std::isfinite(af.second))
            throw NonFiniteCoefficient("coefficient evaluated to NaN/inf at y = " +
                                       std::to_string(y));
        return af;
    };

    double p = phi0, q = dphi0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double y = grid.coordinate(i);
        const auto [a0, f0] = eval(y);
        const auto [am, fm] = eval(y + 0.5 * h);
        const auto [a1, f1] = eval(y + h);

        const double k1p = q;
        const double k1q = a0 * p + f0;

        const double k2p = q + 0.5 * h * k1q;
        const double k2q = am * (p + 0.5 * h * k1p) + fm;

        const double k3p = q + 0.5 * h * k2q;
        const double k3q = am * (p + 0.5 * h * k2p) + fm;

        const double k4p = q + h * k3q;
        const double k4q = a1 * (p + h * k3p) + f1;

        p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        q += h / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
        if (!std::isfinite(p) || !std::isfinite(q))
            throw NonFiniteCoefficient("IVP solution overflowed at y = " +
                                       std::to_string(y + h));
        phi[i + 1] = p;
        dphi[i + 1] = q;
    }

    return IvpSolution{SampledFunction(grid, std::move(phi)),
                       SampledFunction(grid, std::move(dphi))};
}

}  // namespace presurf
