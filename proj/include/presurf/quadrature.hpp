#pragma once

#include <cstddef>
#include <vector>

#include "presurf/grid.hpp"

namespace presurf {

/// Composite Simpson rule on a uniform grid. When the number of intervals is
/// odd, the final interval is integrated with the quadratic through the last
/// three nodes, keeping the rule O(h^4) overall.
inline double simpson(const SampledFunction& f) {
    const std::size_t n = f.size();
    if (n < 3) throw GridTooSmall("simpson requires at least 3 nodes");
    const double h = f.grid.step;
    double sum = 0.0;
    std::size_t i = 0;
    for (; i + 2 < n; i += 2) sum += h / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
    if (i == n - 2)  // one interval left
        sum += h / 12.0 * (-f[n - 3] + 8.0 * f[n - 2] + 5.0 * f[n - 1]);
    return sum;
}

/// Running integral with value 0 at the first node. Even-index nodes carry
/// the composite Simpson sums; odd-index nodes add the corrected-trapezoid
/// half step h(5f0 + 8f1 - f2)/12, which is exact for quadratics.
inline SampledFunction cumulative_simpson(const SampledFunction& f) {
    const std::size_t n = f.size();
    if (n < 3) throw GridTooSmall("cumulative_simpson requires at least 3 nodes");
    const double h = f.grid.step;
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        if (i % 2 == 0) {
            c[i] = c[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
        } else if (i + 1 < n) {
            c[i] = c[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
        } else {
            c[i] = c[i - 1] + h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
        }
    }
    return SampledFunction(f.grid, std::move(c));
}

}  // namespace presurf
