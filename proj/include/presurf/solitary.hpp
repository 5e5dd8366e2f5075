#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "presurf/differentiate.hpp"
#include "presurf/grid.hpp"
#include "presurf/quadrature.hpp"
#include "presurf/rayleigh.hpp"
#include "presurf/shear.hpp"
#include "presurf/spline.hpp"

namespace presurf {

/// Bed-pressure trace (or per-order elevation) in the scaled x variable on a
/// grid symmetric about 0; both ends must sit below decay_tol relative to the
/// maximum.
struct DecayingTrace {
    SampledFunction f;
    double decay_tol = 1e-10;

    DecayingTrace() = default;

    DecayingTrace(SampledFunction f_, double decay_tol_)
        : f(std::move(f_)), decay_tol(decay_tol_) {
        const double l = -f.grid.front(), r = f.grid.back();
        if (std::abs(l - r) > 1e-9 * std::max(std::abs(l), std::abs(r)))
            throw InvalidInput("DecayingTrace grid must be symmetric about 0");
        require_decay(f, decay_tol, "DecayingTrace");
    }

    template <class F>
    static DecayingTrace from(const Grid1D& grid, F&& fn, double decay_tol = 1e-10) {
        return DecayingTrace(SampledFunction::from(grid, fn), decay_tol);
    }

    const Grid1D& grid() const { return f.grid; }
};

/// Cumulative fr(y) = int_0^y dz/(U-c)^2 together with the speed it was built
/// for. fr(h0) is the inverse square of the Froude number.
struct FroudeTable {
    SampledFunction fr;
    double c = 0.0;
};

/// Derivative traces of b1 in the scaled x variable, either finite-difference
/// or analytic (noise-free) ones supplied by the caller.
struct TraceDerivatives {
    SampledFunction d1, d2, d3, d4;
    bool analytic = false;

    static TraceDerivatives finite_difference(const DecayingTrace& b1) {
        TraceDerivatives d;
        d.d1 = differentiate(b1.f, 1, DerivativeMode::decaying, b1.decay_tol);
        d.d2 = differentiate(b1.f, 2, DerivativeMode::decaying, b1.decay_tol);
        d.d3 = differentiate(b1.f, 3, DerivativeMode::decaying, b1.decay_tol);
        d.d4 = differentiate(b1.f, 4, DerivativeMode::decaying, b1.decay_tol);
        d.analytic = false;
        return d;
    }
};

namespace solitary {

inline Grid1D default_x_grid(double half_width = 20.0, std::size_t nodes = 2049) {
    return Grid1D::over(-half_width, half_width, nodes);
}

inline Grid1D default_y_grid(double h0, std::size_t nodes = 401) {
    return Grid1D::over(0.0, h0, nodes);
}

/// All depth-dependent shapes the solitary pipeline needs, built once per
/// (profile, c). With S = U' fr + 1/(U-c) one has S' = U'' fr, so
/// T = S^2 - (U-c) fr S' needs no finite differencing in y.
struct DepthTables {
    Grid1D ygrid;
    double c = 0.0;
    SampledFunction fr;     // int_0^y dz/(U-c)^2
    SampledFunction s;      // S(y)
    SampledFunction t;      // T(y) = S^2 - U'' (U-c) fr^2
    SampledFunction cap_k;  // K(y) = int_0^y (U-c)^2 fr
    SampledFunction q_k;    // int_0^y K/(U-c)^2
    SampledFunction q_t;    // int_0^y T/(U-c)^2
    double k_total = 0.0;   // K(h0), the eta2 depth constant
    double j_qk = 0.0;      // int_0^{h0} (U-c)^2 Q_K
    double j_qt = 0.0;      // int_0^{h0} (U-c)^2 Q_T
    double j_vv = 0.0;      // int_0^{h0} (U-c) fr S
};

inline DepthTables build_depth_tables(const ShearProfile& profile, double c,
                                      const Grid1D* ygrid_in = nullptr) {
    rayleigh::require_supercritical(profile, c);
    DepthTables tab;
    tab.ygrid = ygrid_in ? *ygrid_in : default_y_grid(profile.h0());
    tab.c = c;
    const Grid1D& g = tab.ygrid;
    const std::size_t n = g.count;

    std::vector<double> u(n), du(n), ddu(n), inv2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ShearEval e = profile.eval(g.coordinate(i));
        u[i] = e.u;
        du[i] = e.du;
        ddu[i] = e.ddu;
        const double d = e.u - c;
        inv2[i] = 1.0 / (d * d);
    }

    tab.fr = cumulative_simpson(SampledFunction(g, inv2));

    std::vector<double> s(n), t(n), k_int(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = u[i] - c;
        s[i] = du[i] * tab.fr[i] + 1.0 / d;
        t[i] = s[i] * s[i] - ddu[i] * d * tab.fr[i] * tab.fr[i];
        k_int[i] = d * d * tab.fr[i];
    }
    tab.s = SampledFunction(g, std::move(s));
    tab.t = SampledFunction(g, std::move(t));
    tab.cap_k = cumulative_simpson(SampledFunction(g, std::move(k_int)));
    tab.k_total = tab.cap_k.values.back();

    std::vector<double> qk_int(n), qt_int(n);
    for (std::size_t i = 0; i < n; ++i) {
        qk_int[i] = tab.cap_k[i] * inv2[i];
        qt_int[i] = tab.t[i] * inv2[i];
    }
    tab.q_k = cumulative_simpson(SampledFunction(g, std::move(qk_int)));
    tab.q_t = cumulative_simpson(SampledFunction(g, std::move(qt_int)));

    std::vector<double> jqk(n), jqt(n), jvv(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = u[i] - c;
        jqk[i] = d * d * tab.q_k[i];
        jqt[i] = d * d * tab.q_t[i];
        jvv[i] = d * tab.fr[i] * tab.s[i];
    }
    tab.j_qk = simpson(SampledFunction(g, std::move(jqk)));
    tab.j_qt = simpson(SampledFunction(g, std::move(jqt)));
    tab.j_vv = simpson(SampledFunction(g, std::move(jvv)));
    return tab;
}

inline FroudeTable froude_fr(const ShearProfile& profile, double c,
                             const Grid1D* ygrid = nullptr) {
    rayleigh::require_supercritical(profile, c);
    const Grid1D g = ygrid ? *ygrid : default_y_grid(profile.h0());
    const SampledFunction integrand = SampledFunction::from(g, [&](double y) {
        const double d = profile.eval(y).u - c;
        return 1.0 / (d * d);
    });
    return FroudeTable{cumulative_simpson(integrand), c};
}

/// g eta_1 = b_1: the hydrostatic first order, independent of the shear flow.
inline DecayingTrace reconstruct_eta1(const DecayingTrace& b1, double g) {
    std::vector<double> v(b1.f.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = b1.f[i] / g;
    return DecayingTrace(SampledFunction(b1.grid(), std::move(v)), 10.0 * b1.decay_tol);
}

/// g eta_2 = -b_1'' int_0^{h0} (U-c)^2 fr dy + b_2.
inline DecayingTrace reconstruct_eta2(const ShearProfile& profile, double c,
                                      const DecayingTrace& b1, const DecayingTrace* b2,
                                      double g, const TraceDerivatives* derivs = nullptr,
                                      const Grid1D* ygrid = nullptr) {
    const DepthTables tab = build_depth_tables(profile, c, ygrid);
    const SampledFunction b1pp =
        derivs ? derivs->d2 : differentiate(b1.f, 2, DerivativeMode::decaying, b1.decay_tol);
    if (b2 && !(b2->grid() == b1.grid()))
        throw InvalidInput("b2 must share the x-grid of b1");

    std::vector<double> v(b1.f.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double ge = -tab.k_total * b1pp[i];
        if (b2) ge += b2->f[i];
        v[i] = ge / g;
    }
    return DecayingTrace(SampledFunction(b1.grid(), std::move(v)), 10.0 * b1.decay_tol);
}

namespace detail {

/// Evaluate a trace spline with zero extension beyond the grid.
inline double trace_value(const CubicSpline& s, double x) {
    if (x < s.x_front() || x > s.x_back()) return 0.0;
    return s.value(x);
}

}  // namespace detail

/// First-order interior fields:
///   u_1 = -b_1(x) S(y), v_1 = b_1'(x)(U-c) fr(y), p_1 = b_1(x).
/// fr(0) = 0 makes the bottom impermeability v_1(x,0) = 0 exact.
class FirstOrderFields {
public:
    FirstOrderFields(const ShearProfile& profile, double c, const DecayingTrace& b1,
                     const TraceDerivatives* derivs = nullptr, const Grid1D* ygrid = nullptr)
        : profile_(profile), c_(c) {
        const DepthTables tab = build_depth_tables(profile, c, ygrid);
        fr_.emplace(CubicSpline::from(tab.fr));
        b1_.emplace(CubicSpline::from(b1.f));
        b1p_.emplace(CubicSpline::from(
            derivs ? derivs->d1 : differentiate(b1.f, 1, DerivativeMode::decaying, b1.decay_tol)));
    }

    double u1(double x, double y) const {
        const ShearEval e = profile_.eval(y);
        const double s = e.du * fr_->value(y) + 1.0 / (e.u - c_);
        return -detail::trace_value(*b1_, x) * s;
    }
    double v1(double x, double y) const {
        const ShearEval e = profile_.eval(y);
        return detail::trace_value(*b1p_, x) * (e.u - c_) * fr_->value(y);
    }
    double p1(double x, double y) const {
        (void)y;
        return detail::trace_value(*b1_, x);
    }

private:
    ShearProfile profile_;
    double c_;
    std::optional<CubicSpline> fr_, b1_, b1p_;
};

inline FirstOrderFields first_order_fields(const ShearProfile& profile, double c,
                                           const DecayingTrace& b1,
                                           const TraceDerivatives* derivs = nullptr,
                                           const Grid1D* ygrid = nullptr) {
    return FirstOrderFields(profile, c, b1, derivs, ygrid);
}

/// Second-order interior fields. The x dependence separates into the traces
/// {b_1'', b_2, b_1^2/2} (for u_2, p_2) and {b_1''', b_2', b_1 b_1'} (for
/// v_2); the running integrals over depth live in DepthTables:
///   p_2 = -b_1'' K(y) + b_2,
///   v_2 = (U-c)( -b_1''' Q_K + b_2' fr + (b_1 b_1') Q_T ),
///   u_2 = -U' ( -b_1'' Q_K + b_2 fr + b_1^2/2 Q_T )
///         - ( -b_1'' K + b_2 + b_1^2/2 T ) / (U-c).
/// The x-antiderivatives from -infinity are exact (b_1'', b_2 and b_1^2/2
/// all vanish at the left end within the decay tolerance).
class SecondOrderFields {
public:
    SecondOrderFields(const ShearProfile& profile, double c, const DecayingTrace& b1,
                      const DecayingTrace* b2, const TraceDerivatives* derivs = nullptr,
                      const Grid1D* ygrid = nullptr)
        : profile_(profile), c_(c), tab_(build_depth_tables(profile, c, ygrid)) {
        if (b2 && !(b2->grid() == b1.grid()))
            throw InvalidInput("b2 must share the x-grid of b1");
        const double tol = b1.decay_tol;
        const SampledFunction b1p =
            derivs ? derivs->d1 : differentiate(b1.f, 1, DerivativeMode::decaying, tol);
        const SampledFunction b1pp =
            derivs ? derivs->d2 : differentiate(b1.f, 2, DerivativeMode::decaying, tol);
        const SampledFunction b1ppp =
            derivs ? derivs->d3 : differentiate(b1.f, 3, DerivativeMode::decaying, tol);

        std::vector<double> half_sq(b1.f.size()), prod(b1.f.size());
        for (std::size_t i = 0; i < b1.f.size(); ++i) {
            half_sq[i] = 0.5 * b1.f[i] * b1.f[i];
            prod[i] = b1.f[i] * b1p[i];
        }

        b1pp_.emplace(CubicSpline::from(b1pp));
        b1ppp_.emplace(CubicSpline::from(b1ppp));
        half_sq_.emplace(CubicSpline::from(SampledFunction(b1.grid(), std::move(half_sq))));
        prod_.emplace(CubicSpline::from(SampledFunction(b1.grid(), std::move(prod))));
        if (b2) {
            b2_.emplace(CubicSpline::from(b2->f));
            b2p_.emplace(
                CubicSpline::from(differentiate(b2->f, 1, DerivativeMode::decaying, tol)));
        }
        fr_.emplace(CubicSpline::from(tab_.fr));
        cap_k_.emplace(CubicSpline::from(tab_.cap_k));
        q_k_.emplace(CubicSpline::from(tab_.q_k));
        q_t_.emplace(CubicSpline::from(tab_.q_t));
        t_.emplace(CubicSpline::from(tab_.t));
    }

    double u2(double x, double y) const {
        const ShearEval e = profile_.eval(y);
        const double b2v = b2_ ? detail::trace_value(*b2_, x) : 0.0;
        const double grad =
            -detail::trace_value(*b1pp_, x) * q_k_->value(y) + b2v * fr_->value(y) +
            detail::trace_value(*half_sq_, x) * q_t_->value(y);
        const double head = -detail::trace_value(*b1pp_, x) * cap_k_->value(y) + b2v +
                            detail::trace_value(*half_sq_, x) * t_->value(y);
        return -e.du * grad - head / (e.u - c_);
    }

    double v2(double x, double y) const {
        const ShearEval e = profile_.eval(y);
        const double b2pv = b2p_ ? detail::trace_value(*b2p_, x) : 0.0;
        return (e.u - c_) * (-detail::trace_value(*b1ppp_, x) * q_k_->value(y) +
                             b2pv * fr_->value(y) +
                             detail::trace_value(*prod_, x) * q_t_->value(y));
    }

    double p2(double x, double y) const {
        const double b2v = b2_ ? detail::trace_value(*b2_, x) : 0.0;
        return -detail::trace_value(*b1pp_, x) * cap_k_->value(y) + b2v;
    }

    const DepthTables& tables() const { return tab_; }

private:
    ShearProfile profile_;
    double c_;
    DepthTables tab_;
    std::optional<CubicSpline> b1pp_, b1ppp_, half_sq_, prod_, b2_, b2p_;
    std::optional<CubicSpline> fr_, cap_k_, q_k_, q_t_, t_;
};

inline SecondOrderFields second_order_fields(const ShearProfile& profile, double c,
                                             const DecayingTrace& b1, const DecayingTrace* b2,
                                             const TraceDerivatives* derivs = nullptr,
                                             const Grid1D* ygrid = nullptr) {
    return SecondOrderFields(profile, c, b1, b2, derivs, ygrid);
}

/// g eta_3 = -int_0^{h0} ((U-c) v_{2x} + u_1 v_{1x} + v_1 v_{1y}) dy + b_3.
/// v_{2x} is the decaying-mode x derivative of v_2, taken trace-wise (the
/// depth shapes factor out); the nonlinear first-order terms contract to
/// (b_1'^2 - b_1 b_1'') int_0^{h0} (U-c) fr S dy.
inline DecayingTrace reconstruct_eta3(const ShearProfile& profile, double c,
                                      const DecayingTrace& b1, const DecayingTrace* b2,
                                      const DecayingTrace* b3, double g,
                                      const TraceDerivatives* derivs = nullptr,
                                      const Grid1D* ygrid = nullptr) {
    const DepthTables tab = build_depth_tables(profile, c, ygrid);
    const double tol = b1.decay_tol;
    if (b2 && !(b2->grid() == b1.grid()))
        throw InvalidInput("b2 must share the x-grid of b1");
    if (b3 && !(b3->grid() == b1.grid()))
        throw InvalidInput("b3 must share the x-grid of b1");

    const SampledFunction b1p =
        derivs ? derivs->d1 : differentiate(b1.f, 1, DerivativeMode::decaying, tol);
    const SampledFunction b1pp =
        derivs ? derivs->d2 : differentiate(b1.f, 2, DerivativeMode::decaying, tol);
    const SampledFunction b1ppp =
        derivs ? derivs->d3 : differentiate(b1.f, 3, DerivativeMode::decaying, tol);

    // x derivatives of the v_2 trace coefficients
    const SampledFunction dd1 =
        (derivs && derivs->analytic) ? derivs->d4
                                     : differentiate(b1ppp, 1, DerivativeMode::decaying, tol);
    SampledFunction prod(b1.grid(), std::vector<double>(b1.f.size()));
    for (std::size_t i = 0; i < b1.f.size(); ++i) prod[i] = b1.f[i] * b1p[i];
    SampledFunction dd3(b1.grid(), std::vector<double>(b1.f.size()));
    if (derivs && derivs->analytic) {
        for (std::size_t i = 0; i < b1.f.size(); ++i)
            dd3[i] = b1p[i] * b1p[i] + b1.f[i] * b1pp[i];
    } else {
        dd3 = differentiate(prod, 1, DerivativeMode::decaying, tol);
    }
    std::optional<SampledFunction> dd2;
    if (b2) {
        const SampledFunction b2p = differentiate(b2->f, 1, DerivativeMode::decaying, tol);
        dd2 = differentiate(b2p, 1, DerivativeMode::decaying, tol);
    }

    std::vector<double> v(b1.f.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double column = -dd1[i] * tab.j_qk + dd3[i] * tab.j_qt;
        if (dd2) column += (*dd2)[i] * tab.k_total;
        column += (b1p[i] * b1p[i] - b1.f[i] * b1pp[i]) * tab.j_vv;
        double ge = -column;
        if (b3) ge += b3->f[i];
        v[i] = ge / g;
    }
    return DecayingTrace(SampledFunction(b1.grid(), std::move(v)), 10.0 * tol);
}

/// Per-order elevations and the assembled surface
/// h = h0 + eps eta1 + eps^2 eta2 + eps^3 eta3.
struct SolitaryReconstruction {
    DecayingTrace eta1, eta2, eta3;
    SampledFunction surface;
    WaveParameters params;
    int order = 3;
};

inline SolitaryReconstruction reconstruct(const ShearProfile& profile,
                                          const WaveParameters& params, int order,
                                          const DecayingTrace& b1, const DecayingTrace* b2,
                                          const DecayingTrace* b3,
                                          const TraceDerivatives* derivs = nullptr,
                                          const Grid1D* ygrid = nullptr) {
    if (order < 1 || order > 3) throw InvalidInput("solitary order must be 1, 2 or 3");
    SolitaryReconstruction out;
    out.params = params;
    out.order = order;
    out.eta1 = reconstruct_eta1(b1, params.g);
    if (order >= 2)
        out.eta2 = reconstruct_eta2(profile, params.c, b1, b2, params.g, derivs, ygrid);
    else
        out.eta2 = DecayingTrace(SampledFunction::zeros(b1.grid()), b1.decay_tol);
    if (order >= 3)
        out.eta3 = reconstruct_eta3(profile, params.c, b1, b2, b3, params.g, derivs, ygrid);
    else
        out.eta3 = DecayingTrace(SampledFunction::zeros(b1.grid()), b1.decay_tol);

    const double e1 = params.eps, e2 = e1 * e1, e3 = e2 * e1;
    std::vector<double> h(b1.f.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        h[i] = params.h0 + e1 * out.eta1.f[i] + e2 * out.eta2.f[i] + e3 * out.eta3.f[i];
    out.surface = SampledFunction(b1.grid(), std::move(h));
    return out;
}

}  // namespace solitary
}  // namespace presurf
