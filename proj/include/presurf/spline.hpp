#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "presurf/grid.hpp"

namespace presurf {

/// Not-a-knot cubic spline. C^2 everywhere and exact on cubic polynomials,
/// so tabulated profiles keep a faithful second derivative (a natural spline
/// would force it to zero at the ends).
class CubicSpline {
public:
    CubicSpline(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        if (n != y_.size()) throw InvalidInput("CubicSpline: size mismatch");
        if (n < 2) throw GridTooSmall("CubicSpline requires at least 2 knots");
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (!(x_[i] < x_[i + 1]))
                throw InvalidInput("CubicSpline: knots must be strictly increasing");
        m_.assign(n, 0.0);
        if (n == 2) return;  // linear
        if (n == 3) {
            // single parabola through the three points
            const double h0 = x_[1] - x_[0], h1 = x_[2] - x_[1];
            const double dd = ((y_[2] - y_[1]) / h1 - (y_[1] - y_[0]) / h0) / (h0 + h1);
            m_.assign(n, 2.0 * dd);
            return;
        }
        solve_moments();
    }

    static CubicSpline from(const SampledFunction& f) {
        std::vector<double> x(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) x[i] = f.grid.coordinate(i);
        return CubicSpline(std::move(x), f.values);
    }

    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }

    double value(double x) const {
        const auto [i, t, h] = locate(x);
        const double a = (x_[i + 1] - x) / h, b = t / h;
        return a * y_[i] + b * y_[i + 1] +
               ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
    }

    double derivative(double x) const {
        const auto [i, t, h] = locate(x);
        const double a = (x_[i + 1] - x) / h, b = t / h;
        return (y_[i + 1] - y_[i]) / h +
               (-(3.0 * a * a - 1.0) * m_[i] + (3.0 * b * b - 1.0) * m_[i + 1]) * h / 6.0;
    }

    double second_derivative(double x) const {
        const auto [i, t, h] = locate(x);
        const double a = (x_[i + 1] - x) / h, b = t / h;
        return a * m_[i] + b * m_[i + 1];
    }

private:
    struct Local {
        std::size_t i;
        double t;  // x - x_[i]
        double h;  // knot spacing
    };

    Local locate(double x) const {
        // extrapolate with the end cubics rather than failing on roundoff
        const auto it = std::upper_bound(x_.begin(), x_.end(), x);
        std::size_t i = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
        i = std::min(i, x_.size() - 2);
        return Local{i, x - x_[i], x_[i + 1] - x_[i]};
    }

    void solve_moments() {
        const std::size_t n = x_.size();
        std::vector<double> h(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];

        // Tridiagonal system for the interior moments m_1 .. m_{n-2}; the end
        // moments follow from the not-a-knot relations
        //   m_0 = ((h0+h1) m_1 - h0 m_2) / h1,
        //   m_{n-1} = ((h_{n-3}+h_{n-2}) m_{n-2} - h_{n-2} m_{n-3}) / h_{n-3}.
        const std::size_t m = n - 2;
        std::vector<double> lower(m, 0.0), diag(m, 0.0), upper(m, 0.0), rhs(m, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const std::size_t r = i - 1;
            lower[r] = h[i - 1] / 6.0;
            diag[r] = (h[i - 1] + h[i]) / 3.0;
            upper[r] = h[i] / 6.0;
            rhs[r] = (y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1];
        }
        // fold the not-a-knot relations into the first and last rows
        diag[0] += lower[0] * (h[0] + h[1]) / h[1];
        upper[0] -= lower[0] * h[0] / h[1];
        lower[0] = 0.0;
        diag[m - 1] += upper[m - 1] * (h[n - 3] + h[n - 2]) / h[n - 3];
        lower[m - 1] -= upper[m - 1] * h[n - 2] / h[n - 3];
        upper[m - 1] = 0.0;

        // Thomas algorithm
        for (std::size_t r = 1; r < m; ++r) {
            const double w = lower[r] / diag[r - 1];
            diag[r] -= w * upper[r - 1];
            rhs[r] -= w * rhs[r - 1];
        }
        std::vector<double> sol(m);
        sol[m - 1] = rhs[m - 1] / diag[m - 1];
        for (std::size_t r = m - 1; r-- > 0;) sol[r] = (rhs[r] - upper[r] * sol[r + 1]) / diag[r];

        for (std::size_t r = 0; r < m; ++r) m_[r + 1] = sol[r];
        m_[0] = ((h[0] + h[1]) * m_[1] - h[0] * m_[2]) / h[1];
        m_[n - 1] = ((h[n - 3] + h[n - 2]) * m_[n - 2] - h[n - 2] * m_[n - 3]) / h[n - 3];
    }

    std::vector<double> x_, y_, m_;
};

}  // namespace presurf
