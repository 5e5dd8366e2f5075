#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "presurf/closed_forms.hpp"
#include "presurf/csv_io.hpp"
#include "presurf/exact_relation.hpp"
#include "presurf/rayleigh.hpp"
#include "presurf/shear.hpp"
#include "presurf/solitary.hpp"
#include "presurf/stokes.hpp"

namespace presurf {
namespace cli {

enum class Mode { dispersion, stokes, solitary, exact, compare };

/// Batch configuration. Flags win over config-file values; the parsing lives
/// in the executable, this struct is the resolved result.
struct RunConfig {
    Mode mode = Mode::dispersion;
    std::string profile = "zero";  // zero | constant | poiseuille | <csv path>
    double gamma = 0.0;
    double g = 9.81;
    double h0 = 1.0;
    double k = 1.0;
    double eps = 1.0;
    int order = 2;  // stokes 1..2, solitary 1..3
    std::optional<double> c_override;
    std::string input_path;
    std::string output_path = "out.csv";
    std::string derivatives_path;
    std::size_t x_points = 256;
    std::size_t y_steps = 2000;  // Rayleigh Cauchy grid
    std::size_t y_nodes = 401;   // solitary depth grid
    double decay_tol = 1e-10;
    double tol = 1e-12;
    int max_iter = 50;
    double relax = 1.0;
    std::string compare_case = "stokes";
    double b = 0.1;  // cosine amplitude for compare tables
};

namespace detail {

inline ShearProfile make_profile(const RunConfig& cfg) {
    if (cfg.profile == "zero") return ShearProfile::zero(cfg.h0);
    if (cfg.profile == "constant") return ShearProfile::constant_vorticity(cfg.gamma, cfg.h0);
    if (cfg.profile == "poiseuille") return ShearProfile::poiseuille(cfg.h0);
    return io::load_shear_profile(cfg.profile);
}

inline std::string profile_label(const RunConfig& cfg, const ShearProfile& profile) {
    switch (profile.kind()) {
        case ShearKind::zero:
            return "zero";
        case ShearKind::constant_vorticity:
            return "constant gamma=" + io::format_float(profile.gamma());
        case ShearKind::poiseuille:
            return "poiseuille";
        case ShearKind::tabulated:
            return "tabulated(" + cfg.profile + ")";
    }
    return "?";
}

inline void echo_common(std::ostream& out, const RunConfig& cfg, const ShearProfile& profile) {
    out << "profile: " << profile_label(cfg, profile) << "\n";
    out << "g: " << io::format_float(cfg.g) << "\n";
    out << "h0: " << io::format_float(profile.h0()) << "\n";
}

/// Wave speed for the periodic pipeline: the caller's override verbatim, or
/// the bifurcation speed.
inline std::pair<double, bool> resolve_stokes_speed(const RunConfig& cfg,
                                                    const ShearProfile& profile,
                                                    std::ostream& out) {
    if (cfg.c_override) {
        out << "c_override: " << io::format_float(*cfg.c_override) << "\n";
        out << "c: " << io::format_float(*cfg.c_override) << " (override)\n";
        return {*cfg.c_override, false};
    }
    const auto r = rayleigh::bifurcation_speed(profile, cfg.g, profile.h0(), cfg.k);
    out << "c: " << io::format_float(r.c) << " (bifurcation)\n";
    if (r.multiple_roots)
        out << "warning: MultipleRootsWarning — smallest bifurcation root returned\n";
    return {r.c, r.multiple_roots};
}

inline double resolve_solitary_speed(const RunConfig& cfg, const ShearProfile& profile,
                                     std::ostream& out) {
    if (cfg.c_override) {
        out << "c_override: " << io::format_float(*cfg.c_override) << "\n";
        out << "c: " << io::format_float(*cfg.c_override) << " (override)\n";
        return *cfg.c_override;
    }
    const double c = rayleigh::burns_speed(profile, cfg.g);
    out << "c: " << io::format_float(c) << " (Burns critical speed)\n";
    return c;
}

inline void run_dispersion(const RunConfig& cfg, std::ostream& out) {
    const ShearProfile profile = make_profile(cfg);
    out << "mode: dispersion\n";
    echo_common(out, cfg, profile);
    out << "k: " << io::format_float(cfg.k) << "\n";
    if (cfg.c_override) out << "c_override: " << io::format_float(*cfg.c_override) << "\n";

    const auto r = rayleigh::bifurcation_speed(profile, cfg.g, profile.h0(), cfg.k);
    out << "bifurcation_speed: " << io::format_float(r.c) << "\n";
    if (r.multiple_roots)
        out << "warning: MultipleRootsWarning — smallest bifurcation root returned\n";
    if (profile.kind() == ShearKind::zero)
        out << "closed_form_dispersion: "
            << io::format_float(rayleigh::dispersion_zero(cfg.g, profile.h0(), cfg.k)) << "\n";
    if (profile.kind() == ShearKind::constant_vorticity)
        out << "closed_form_dispersion: "
            << io::format_float(rayleigh::dispersion_constant_vorticity(
                   profile.gamma(), cfg.g, profile.h0(), cfg.k))
            << "\n";

    const double cb = rayleigh::burns_speed(profile, cfg.g);
    out << "burns_speed: " << io::format_float(cb) << "\n";
    if (profile.kind() == ShearKind::zero)
        out << "closed_form_burns: " << io::format_float(rayleigh::burns_zero(cfg.g, profile.h0()))
            << "\n";
    if (profile.kind() == ShearKind::constant_vorticity)
        out << "closed_form_burns: "
            << io::format_float(
                   rayleigh::burns_constant_vorticity(profile.gamma(), cfg.g, profile.h0()))
            << "\n";
}

inline void run_stokes(const RunConfig& cfg, std::ostream& out) {
    if (cfg.input_path.empty())
        throw InvalidInput("stokes mode requires --input with a periodic pressure trace");
    if (cfg.order != 1 && cfg.order != 2)
        throw InvalidInput("stokes order must be 1 or 2");

    const ShearProfile profile = make_profile(cfg);
    const PeriodicPressure pressure = io::parse_periodic_pressure(cfg.input_path, cfg.k);

    out << "mode: stokes\n";
    echo_common(out, cfg, profile);
    out << "k: " << io::format_float(cfg.k) << "\n";
    out << "order: " << cfg.order << "\n";
    out << "eps: " << io::format_float(cfg.eps) << "  (assembly weight; inputs must already "
           "be small)\n";

    WaveParameters params{cfg.g, profile.h0(), cfg.k, 0.0, cfg.eps};
    params.c = resolve_stokes_speed(cfg, profile, out).first;

    const auto recon = stokes::reconstruct(profile, params, pressure, cfg.order,
                                           cfg.x_points, cfg.y_steps);

    std::vector<double> x(recon.eta1.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = recon.eta1.grid.coordinate(i);
    std::vector<double> total(recon.eta1.size());
    for (std::size_t i = 0; i < total.size(); ++i)
        total[i] = cfg.eps * recon.eta1[i] + cfg.eps * cfg.eps * recon.eta2[i];

    std::vector<std::string> names{"eta1"};
    std::vector<const std::vector<double>*> cols{&recon.eta1.values};
    if (cfg.order >= 2) {
        names.push_back("eta2");
        cols.push_back(&recon.eta2.values);
    }
    names.push_back("eta_total");
    cols.push_back(&total);
    io::write_file(cfg.output_path, io::render_csv(names, x, cols));

    out << "max_abs_eta1: " << io::format_float(recon.eta1.max_abs()) << "\n";
    if (cfg.order >= 2) out << "max_abs_eta2: " << io::format_float(recon.eta2.max_abs()) << "\n";
    out << "wrote: " << cfg.output_path << "\n";
}

inline void run_solitary(const RunConfig& cfg, std::ostream& out) {
    if (cfg.input_path.empty())
        throw InvalidInput("solitary mode requires --input with decaying pressure traces");
    if (cfg.order < 1 || cfg.order > 3)
        throw InvalidInput("solitary order must be 1, 2 or 3");

    const ShearProfile profile = make_profile(cfg);
    const io::DecayingColumns traces = io::parse_decaying_traces(cfg.input_path, cfg.decay_tol);

    out << "mode: solitary\n";
    echo_common(out, cfg, profile);
    out << "order: " << cfg.order << "\n";
    out << "eps: " << io::format_float(cfg.eps)
        << "  (assembly weight; x is the scaled variable, x_phys = x/sqrt(eps))\n";
    out << "decay_tol: " << io::format_float(cfg.decay_tol) << "\n";

    WaveParameters params{cfg.g, profile.h0(), cfg.k, 0.0, cfg.eps};
    params.c = resolve_solitary_speed(cfg, profile, out);

    std::optional<TraceDerivatives> derivs;
    if (!cfg.derivatives_path.empty()) {
        derivs = io::parse_trace_derivatives(cfg.derivatives_path, traces.b1.grid());
        out << "derivatives: analytic (" << cfg.derivatives_path << ")\n";
    } else {
        out << "derivatives: finite-difference\n";
    }

    const Grid1D ygrid = solitary::default_y_grid(profile.h0(), cfg.y_nodes);
    const auto recon = solitary::reconstruct(
        profile, params, cfg.order, traces.b1, traces.b2 ? &*traces.b2 : nullptr,
        traces.b3 ? &*traces.b3 : nullptr, derivs ? &*derivs : nullptr, &ygrid);

    const double delta = std::sqrt(cfg.eps);
    std::vector<double> x(recon.eta1.f.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = recon.eta1.grid().coordinate(i) / delta;
    std::vector<double> total(x.size());
    const double e1 = cfg.eps, e2 = e1 * e1, e3 = e2 * e1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        total[i] = e1 * recon.eta1.f[i];
        if (cfg.order >= 2) total[i] += e2 * recon.eta2.f[i];
        if (cfg.order >= 3) total[i] += e3 * recon.eta3.f[i];
    }

    std::vector<std::string> names{"eta1"};
    std::vector<const std::vector<double>*> cols{&recon.eta1.f.values};
    if (cfg.order >= 2) {
        names.push_back("eta2");
        cols.push_back(&recon.eta2.f.values);
    }
    if (cfg.order >= 3) {
        names.push_back("eta3");
        cols.push_back(&recon.eta3.f.values);
    }
    names.push_back("eta_total");
    cols.push_back(&total);
    io::write_file(cfg.output_path, io::render_csv(names, x, cols));

    const auto tab = solitary::build_depth_tables(profile, params.c, &ygrid);
    out << "depth_constant: " << io::format_float(tab.k_total) << "\n";
    out << "g*fr(h0): " << io::format_float(cfg.g * tab.fr.values.back()) << "\n";
    out << "max_abs_eta1: " << io::format_float(recon.eta1.f.max_abs()) << "\n";
    if (cfg.order >= 2)
        out << "max_abs_eta2: " << io::format_float(recon.eta2.f.max_abs()) << "\n";
    if (cfg.order >= 3)
        out << "max_abs_eta3: " << io::format_float(recon.eta3.f.max_abs()) << "\n";
    out << "wrote: " << cfg.output_path << "\n";
}

inline void run_exact(const RunConfig& cfg, std::ostream& out) {
    if (cfg.input_path.empty())
        throw InvalidInput("exact mode requires --input with a periodic pressure trace");
    const io::TraceData data = io::read_trace_csv(cfg.input_path);
    const double period = 2.0 * std::numbers::pi / cfg.k;
    const double span = data.grid.step * static_cast<double>(data.grid.count);
    if (std::abs(span - period) > 1e-6 * period)
        throw InvalidInput("exact mode: trace must span one 2*pi/k period");
    if (std::abs(data.grid.start) > 1e-9 * period)
        throw InvalidInput("exact mode: trace must start at x = 0");

    out << "mode: exact\n";
    out << "g: " << io::format_float(cfg.g) << "\n";
    out << "h0: " << io::format_float(cfg.h0) << "\n";
    out << "k: " << io::format_float(cfg.k) << "\n";
    double c;
    if (cfg.c_override) {
        c = *cfg.c_override;
        out << "c_override: " << io::format_float(c) << "\n";
        out << "c: " << io::format_float(c) << " (override)\n";
    } else {
        c = rayleigh::dispersion_zero(cfg.g, cfg.h0, cfg.k);
        out << "c: " << io::format_float(c) << " (zero-vorticity dispersion)\n";
    }

    const SampledFunction trace(data.grid, data.columns[0]);
    const auto state = reference::exact_zero_vorticity_solve(trace, c, cfg.h0, cfg.g, cfg.tol,
                                                             cfg.max_iter, cfg.relax);
    out << "iterations: " << state.iterations << "\n";
    for (std::size_t i = 0; i < state.residual_history.size(); ++i)
        out << "iter " << (i + 1) << ": update = "
            << io::format_float(state.residual_history[i]) << "\n";

    std::vector<double> x(state.eta.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = state.eta.grid.coordinate(i);
    io::write_file(cfg.output_path, io::render_csv({"eta"}, x, {&state.eta.values}));
    out << "wrote: " << cfg.output_path << "\n";
}

inline void run_compare(const RunConfig& cfg, std::ostream& out) {
    if (cfg.compare_case == "stokes") {
        out << "mode: compare (periodic second order)\n";
        out << "b: " << io::format_float(cfg.b) << "\n";
        out << "g: " << io::format_float(cfg.g) << "\n";
        out << "columns: mode-0 and cos(2x) coefficients of eta2 for the reconstruction, "
               "the exact-relation expansion, and the true-solution expansion\n";
        const std::vector<double> h0s{0.4, 0.2, 0.1, 0.05};
        std::string csv =
            "h0,c,recon_mode0,recon_cos2x,exactrel_mode0,exactrel_cos2x,whitham_mode0,"
            "whitham_cos2x\n";
        for (const double h0 : h0s) {
            const double c = rayleigh::dispersion_zero(cfg.g, h0, 1.0);
            const double sh2 = std::sinh(h0) * std::sinh(h0);
            const double bc2 = (cfg.b / c) * (cfg.b / c);
            const double recon_mode0 = -0.5 * bc2 * sh2 / cfg.g;
            const double recon_cos2x = 0.5 * bc2 * sh2 / cfg.g;
            const double ex_mode0 = 0.25 * bc2 / cfg.g;
            const double ex_cos2x = bc2 * sh2 / cfg.g;
            const double wh_mode0 = -0.25 * bc2 / (std::cosh(h0) * std::cosh(h0)) / cfg.g;
            const double wh_cos2x = 0.25 * bc2 * (2.0 + 3.0 / sh2) / cfg.g;
            csv += io::format_float(h0);
            for (const double v :
                 {c, recon_mode0, recon_cos2x, ex_mode0, ex_cos2x, wh_mode0, wh_cos2x})
                csv += "," + io::format_float(v);
            csv += "\n";
        }
        io::write_file(cfg.output_path, csv);
        out << "wrote: " << cfg.output_path << "\n";
        return;
    }
    if (cfg.compare_case == "solitary") {
        out << "mode: compare (solitary, dimensionless h0 = g = c = 1)\n";
        out << "b1: " << io::format_float(cfg.b) << " * sech^2(x)\n";
        const auto b1 = reference::AnalyticTrace::sech2(cfg.b);
        const auto ours = reference::closed_form_solitary_zero(b1, 1.0, 1.0, 1.0);
        const auto cmp = reference::closed_form_solitary_dimensionless(b1, 1.0);
        const Grid1D grid = solitary::default_x_grid();
        std::vector<double> x(grid.count), e1(grid.count), e2(grid.count), e3(grid.count),
            e2c(grid.count), e3c(grid.count);
        for (std::size_t i = 0; i < grid.count; ++i) {
            x[i] = grid.coordinate(i);
            e1[i] = ours.eta1(x[i]);
            e2[i] = ours.eta2(x[i]);
            e3[i] = ours.eta3(x[i]);
            e2c[i] = cmp.eta2(x[i]);
            e3c[i] = cmp.eta3(x[i]);
        }
        io::write_file(cfg.output_path,
                       io::render_csv({"eta1", "eta2", "eta3", "eta2_cmp", "eta3_cmp"}, x,
                                      {&e1, &e2, &e3, &e2c, &e3c}));
        out << "wrote: " << cfg.output_path << "\n";
        return;
    }
    throw InvalidInput("compare case must be 'stokes' or 'solitary'");
}

}  // namespace detail

/// Dispatch a resolved configuration. Throws presurf::Error on any contract
/// violation; writes output files only after the computation succeeded.
inline void run(const RunConfig& cfg, std::ostream& out) {
    switch (cfg.mode) {
        case Mode::dispersion:
            detail::run_dispersion(cfg, out);
            return;
        case Mode::stokes:
            detail::run_stokes(cfg, out);
            return;
        case Mode::solitary:
            detail::run_solitary(cfg, out);
            return;
        case Mode::exact:
            detail::run_exact(cfg, out);
            return;
        case Mode::compare:
            detail::run_compare(cfg, out);
            return;
    }
    throw InvalidInput("unknown mode");
}

}  // namespace cli
}  // namespace presurf
