#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "presurf/errors.hpp"

namespace presurf {

/// Uniform 1-D grid. Node i sits at start + i*step; that rule is the
/// definition of the coordinates, so they are reproducible bit for bit.
struct Grid1D {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 2;

    Grid1D() = default;

    Grid1D(double start_, double step_, std::size_t count_)
        : start(start_), step(step_), count(count_) {
        if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(start))
            throw InvalidInput("Grid1D requires finite start and step > 0");
        if (count < 2) throw GridTooSmall("Grid1D requires count >= 2");
    }

    /// Grid with count nodes whose first and last nodes are a and b.
    static Grid1D over(double a, double b, std::size_t count) {
        if (count < 2) throw GridTooSmall("Grid1D requires count >= 2");
        return Grid1D(a, (b - a) / static_cast<double>(count - 1), count);
    }

    double coordinate(std::size_t i) const { return start + static_cast<double>(i) * step; }
    double front() const { return start; }
    double back() const { return coordinate(count - 1); }
    /// Distance from the first to the last node.
    double span() const { return step * static_cast<double>(count - 1); }

    bool operator==(const Grid1D& other) const {
        return start == other.start && step == other.step && count == other.count;
    }
};

/// Real values sampled on a uniform grid. values.size() == grid.count and
/// every entry is finite.
struct SampledFunction {
    Grid1D grid;
    std::vector<double> values;

    SampledFunction() : values(grid.count, 0.0) {}

    SampledFunction(Grid1D grid_, std::vector<double> values_)
        : grid(grid_), values(std::move(values_)) {
        if (values.size() != grid.count)
            throw InvalidInput("SampledFunction: values.size() != grid.count");
        for (double v : values)
            if (!std::isfinite(v))
                throw InvalidInput("SampledFunction: non-finite sample");
    }

    template <class F>
    static SampledFunction from(const Grid1D& grid, F&& f) {
        std::vector<double> v(grid.count);
        for (std::size_t i = 0; i < grid.count; ++i) v[i] = f(grid.coordinate(i));
        return SampledFunction(grid, std::move(v));
    }

    static SampledFunction zeros(const Grid1D& grid) {
        return SampledFunction(grid, std::vector<double>(grid.count, 0.0));
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }
};

/// Largest pointwise |a - b|; the grids must match.
inline double max_abs_difference(const SampledFunction& a, const SampledFunction& b) {
    if (!(a.grid == b.grid)) throw InvalidInput("max_abs_difference: grid mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace presurf
