#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "presurf/grid.hpp"
#include "presurf/spline.hpp"

namespace presurf {

enum class ShearKind { zero, constant_vorticity, poiseuille, tabulated };

/// U, U' and U'' at one depth. SI units: m/s, 1/s, 1/(m s).
struct ShearEval {
    double u;
    double du;
    double ddu;
};

/// Background current U(y) on [0, h0]. Analytic kinds evaluate exactly;
/// tabulated profiles go through a C^2 cubic spline. Immutable once built.
class ShearProfile {
public:
    static ShearProfile zero(double h0) { return ShearProfile(ShearKind::zero, h0, 0.0); }

    /// U(y) = gamma * y, vorticity -gamma.
    static ShearProfile constant_vorticity(double gamma, double h0) {
        return ShearProfile(ShearKind::constant_vorticity, h0, gamma);
    }

    /// U(y) = h0^2 - y^2.
    static ShearProfile poiseuille(double h0) {
        return ShearProfile(ShearKind::poiseuille, h0, 0.0);
    }

    static ShearProfile tabulated(const SampledFunction& samples) {
        std::vector<double> y(samples.size());
        for (std::size_t i = 0; i < samples.size(); ++i) y[i] = samples.grid.coordinate(i);
        return tabulated(std::move(y), samples.values);
    }

    /// Samples (y, U) with strictly increasing y running from 0 to h0.
    static ShearProfile tabulated(std::vector<double> y, std::vector<double> u) {
        if (y.size() < 4) throw GridTooSmall("tabulated profile needs at least 4 samples");
        const double h0 = y.back();
        if (!(h0 > 0.0)) throw InvalidInput("tabulated profile must end at h0 > 0");
        if (std::abs(y.front()) > 1e-9 * h0)
            throw InvalidInput("tabulated profile must start at y = 0");
        y.front() = 0.0;
        ShearProfile p(ShearKind::tabulated, h0, 0.0);
        p.spline_.emplace(std::move(y), std::move(u));
        return p;
    }

    ShearKind kind() const { return kind_; }
    double h0() const { return h0_; }
    /// Only meaningful for the constant-vorticity kind.
    double gamma() const { return gamma_; }

    ShearEval eval(double y) const {
        if (y < -domain_slack() || y > h0_ + domain_slack())
            throw OutOfDomain("y = " + std::to_string(y) + " outside [0, " +
                              std::to_string(h0_) + "]");
        y = std::min(std::max(y, 0.0), h0_);
        switch (kind_) {
            case ShearKind::zero:
                return {0.0, 0.0, 0.0};
            case ShearKind::constant_vorticity:
                return {gamma_ * y, gamma_, 0.0};
            case ShearKind::poiseuille:
                return {h0_ * h0_ - y * y, -2.0 * y, -2.0};
            case ShearKind::tabulated:
                return {spline_->value(y), spline_->derivative(y),
                        spline_->second_derivative(y)};
        }
        throw InvalidInput("unreachable shear kind");
    }

    /// max of U over [0, h0]. Closed form for the analytic kinds; the spline
    /// is scanned over knots, interior critical points and a fine grid.
    double max_velocity() const {
        switch (kind_) {
            case ShearKind::zero:
                return 0.0;
            case ShearKind::constant_vorticity:
                return std::max(0.0, gamma_ * h0_);
            case ShearKind::poiseuille:
                return h0_ * h0_;  // attained at y = 0
            case ShearKind::tabulated:
                return tabulated_max();
        }
        throw InvalidInput("unreachable shear kind");
    }

private:
    ShearProfile(ShearKind kind, double h0, double gamma)
        : kind_(kind), h0_(h0), gamma_(gamma) {
        if (!(h0 > 0.0) || !std::isfinite(h0)) throw InvalidInput("ShearProfile requires h0 > 0");
    }

    double domain_slack() const { return 1e-9 * h0_; }

    double tabulated_max() const {
        double m = spline_->value(0.0);
        const std::size_t scan = 1024;
        for (std::size_t i = 1; i <= scan; ++i) {
            const double y = h0_ * static_cast<double>(i) / static_cast<double>(scan);
            m = std::max(m, spline_->value(y));
        }
        // derivative roots of each cubic piece, found by bisection on U'
        const std::size_t refine = 4096;
        double prev_y = 0.0, prev_d = spline_->derivative(0.0);
        for (std::size_t i = 1; i <= refine; ++i) {
            const double y = h0_ * static_cast<double>(i) / static_cast<double>(refine);
            const double d = spline_->derivative(y);
            if (prev_d == 0.0 || prev_d * d < 0.0) {
                double a = prev_y, b = y;
                for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (a + b);
                    if (spline_->derivative(a) * spline_->derivative(mid) <= 0.0)
                        b = mid;
                    else
                        a = mid;
                }
                m = std::max(m, spline_->value(0.5 * (a + b)));
            }
            prev_y = y;
            prev_d = d;
        }
        return m;
    }

    ShearKind kind_;
    double h0_;
    double gamma_;
    std::optional<CubicSpline> spline_;
};

}  // namespace presurf
