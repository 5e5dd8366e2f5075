#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "presurf/errors.hpp"

namespace presurf {
namespace reference {

/// Closed-form per-order elevations for the cosine Stokes examples; pure
/// functions of x, evaluable anywhere.
struct StokesClosedForm {
    std::function<double(double)> eta1;
    std::function<double(double)> eta2;
};

/// Zero vorticity, p_1(x,0) = b cos x, p_2 = 0:
///   g eta_1 = b cosh(h0) cos x,
///   g eta_2 = (b/c)^2 sinh^2(h0) (-1 + cos 2x) / 2.
inline StokesClosedForm closed_form_stokes_zero(double b, double c, double h0, double g) {
    const double a1 = b * std::cosh(h0) / g;
    const double a2 = 0.5 * (b / c) * (b / c) * std::sinh(h0) * std::sinh(h0) / g;
    return {[a1](double x) { return a1 * std::cos(x); },
            [a2](double x) { return a2 * (-1.0 + std::cos(2.0 * x)); }};
}

/// Constant vorticity U = gamma y with the same pressure input:
///   g eta_1 = b ((c - gamma h0)/c cosh h0 + gamma/c sinh h0) cos x,
///   g eta_2 = (b/c)^2 ( -2 sinh^2 h0
///             + ((c - gamma h0)/c cosh 2h0 + gamma/(2c) sinh 2h0 - 1) cos 2x ) / 4.
inline StokesClosedForm closed_form_stokes_constant(double gamma, double b, double c,
                                                    double h0, double g) {
    const double a1 =
        b * ((c - gamma * h0) / c * std::cosh(h0) + gamma / c * std::sinh(h0)) / g;
    const double q = 0.25 * (b / c) * (b / c) / g;
    const double mode0 = -2.0 * std::sinh(h0) * std::sinh(h0);
    const double mode2 = (c - gamma * h0) / c * std::cosh(2.0 * h0) +
                         gamma / (2.0 * c) * std::sinh(2.0 * h0) - 1.0;
    return {[a1](double x) { return a1 * std::cos(x); },
            [q, mode0, mode2](double x) { return q * (mode0 + mode2 * std::cos(2.0 * x)); }};
}

enum class AsymptoticVariant {
    ovdh1,     ///< first order of the exact-relation expansion
    ovdh2,     ///< second order of the exact-relation expansion
    whitham2,  ///< second order of the small-amplitude true-solution expansion
};

/// Small-amplitude expansions of the zero-vorticity exact relation and of the
/// true Stokes solution, for comparison against the reconstruction formulas
/// (all with k = 1 and c^2 = g tanh h0).
inline std::function<double(double)> appendix_asymptotic_eta(AsymptoticVariant variant,
                                                             double b, double c, double h0,
                                                             double g) {
    switch (variant) {
        case AsymptoticVariant::ovdh1: {
            const double a = b * std::cosh(h0) / g;
            return [a](double x) { return a * std::cos(x); };
        }
        case AsymptoticVariant::ovdh2: {
            const double q = (b / (2.0 * c)) * (b / (2.0 * c)) / g;
            const double sh2 = std::sinh(h0) * std::sinh(h0);
            return [q, sh2](double x) { return q * (1.0 + 4.0 * sh2 * std::cos(2.0 * x)); };
        }
        case AsymptoticVariant::whitham2: {
            const double q = 0.25 * (b / c) * (b / c) / g;
            const double ch2 = std::cosh(h0) * std::cosh(h0);
            const double sh2 = std::sinh(h0) * std::sinh(h0);
            return [q, ch2, sh2](double x) {
                return q * (-1.0 / ch2 + (2.0 + 3.0 / sh2) * std::cos(2.0 * x));
            };
        }
    }
    throw InvalidInput("unreachable asymptotic variant");
}

/// Trace with analytic derivatives. The closed-form solitary oracles must not
/// depend on the finite-difference machinery they are used to validate.
struct AnalyticTrace {
    std::function<double(double)> f, d1, d2, d3, d4;

    /// a sech^2(x): the standard test input.
    static AnalyticTrace sech2(double a) {
        const auto sech = [](double x) { return 1.0 / std::cosh(x); };
        return AnalyticTrace{
            [a, sech](double x) { return a * sech(x) * sech(x); },
            [a, sech](double x) {
                const double s = sech(x), t = std::tanh(x);
                return -2.0 * a * s * s * t;
            },
            [a, sech](double x) {
                const double s2 = sech(x) * sech(x);
                return a * (4.0 * s2 - 6.0 * s2 * s2);
            },
            [a, sech](double x) {
                const double s2 = sech(x) * sech(x);
                const double t = std::tanh(x);
                return a * (-8.0 * s2 + 24.0 * s2 * s2) * t;
            },
            [a, sech](double x) {
                const double s2 = sech(x) * sech(x);
                return a * (16.0 * s2 - 120.0 * s2 * s2 + 120.0 * s2 * s2 * s2);
            }};
    }
};

struct SolitaryClosedForm {
    std::function<double(double)> eta1;
    std::function<double(double)> eta2;
    std::function<double(double)> eta3;
    bool has_eta3 = false;
};

/// Zero vorticity:
///   g eta_2 = -h0^2 b_1''/2,
///   g eta_3 = h0^4 b_1''''/24 - h0^2 b_1'^2 / c^2.
inline SolitaryClosedForm closed_form_solitary_zero(const AnalyticTrace& b1, double c,
                                                    double h0, double g) {
    SolitaryClosedForm out;
    out.eta1 = [b1, g](double x) { return b1.f(x) / g; };
    out.eta2 = [b1, h0, g](double x) { return -0.5 * h0 * h0 * b1.d2(x) / g; };
    out.eta3 = [b1, h0, c, g](double x) {
        const double d1 = b1.d1(x);
        return (h0 * h0 * h0 * h0 * b1.d4(x) / 24.0 - h0 * h0 * d1 * d1 / (c * c)) / g;
    };
    out.has_eta3 = true;
    return out;
}

/// Constant vorticity U = gamma y:
///   g eta_2 = b_1''/c (gamma h0^3/3 - c h0^2/2).
inline SolitaryClosedForm closed_form_solitary_constant(double gamma,
                                                        const AnalyticTrace& b1, double c,
                                                        double h0, double g) {
    SolitaryClosedForm out;
    out.eta1 = [b1, g](double x) { return b1.f(x) / g; };
    const double factor = (gamma * h0 * h0 * h0 / 3.0 - c * h0 * h0 / 2.0) / c;
    out.eta2 = [b1, factor, g](double x) { return factor * b1.d2(x) / g; };
    return out;
}

/// fr(y) for U = h0^2 - y^2 with a = sqrt(c - h0^2):
/// fr(y) = (a y/(y^2 + a^2) + arctan(y/a)) / (2 a^3).
inline double poiseuille_fr(double y, double c, double h0) {
    const double a = std::sqrt(c - h0 * h0);
    return (a * y / (y * y + a * a) + std::atan(y / a)) / (2.0 * a * a * a);
}

/// Variant with the inverse hyperbolic tangent in place of the arctangent.
/// Differentiating the arctan form recovers the integrand 1/(y^2+a^2)^2, the
/// atanh form does not; kept only so the mismatch can be demonstrated.
inline double poiseuille_fr_atanh_variant(double y, double c, double h0) {
    const double a = std::sqrt(c - h0 * h0);
    return (a * y / (y * y + a * a) + std::atanh(y / a)) / (2.0 * a * a * a);
}

/// int_0^{h0} (U-c)^2 fr dy for the Poiseuille profile, in closed form.
inline double poiseuille_depth_constant(double c, double h0) {
    const double am2 = c - h0 * h0;
    const double a = std::sqrt(am2);
    const double h2 = h0 * h0;
    return (h0 * (15.0 * c * c - 20.0 * c * h2 + 8.0 * h2 * h2) * std::atan(h0 / a) +
            a * (h2 * (4.0 * c - h2) + 4.0 * am2 * am2 * std::log(am2 / c))) /
           (30.0 * am2 * a);
}

/// Poiseuille flow U = h0^2 - y^2: g eta_2 = -b_1'' * depth constant.
inline SolitaryClosedForm closed_form_solitary_poiseuille(const AnalyticTrace& b1, double c,
                                                          double h0, double g) {
    SolitaryClosedForm out;
    out.eta1 = [b1, g](double x) { return b1.f(x) / g; };
    const double k_total = poiseuille_depth_constant(c, h0);
    out.eta2 = [b1, k_total, g](double x) { return -k_total * b1.d2(x) / g; };
    return out;
}

/// Zero-vorticity comparison formulas from the exact-relation literature, in
/// dimensionless variables (h0 = g = 1, c near 1):
///   eta_1 = b_1, eta_2 = -b_1''/2,
///   eta_3 = b_1''''/24 - b_1 b_1'' - b_1'^2 (c^2 + 1/c^2)/2.
inline SolitaryClosedForm closed_form_solitary_dimensionless(const AnalyticTrace& b1,
                                                             double c) {
    SolitaryClosedForm out;
    out.eta1 = [b1](double x) { return b1.f(x); };
    out.eta2 = [b1](double x) { return -0.5 * b1.d2(x); };
    out.eta3 = [b1, c](double x) {
        const double d1 = b1.d1(x);
        return b1.d4(x) / 24.0 - b1.f(x) * b1.d2(x) -
               0.5 * d1 * d1 * (c * c + 1.0 / (c * c));
    };
    out.has_eta3 = true;
    return out;
}

}  // namespace reference
}  // namespace presurf
