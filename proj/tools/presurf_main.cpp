// Command-line front end: parses flags (plus an optional key=value config
// file; flags win) into a RunConfig and dispatches.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "presurf/cli.hpp"

namespace {

void add_profile_options(CLI::App* cmd, presurf::cli::RunConfig& cfg) {
    cmd->add_option("--profile", cfg.profile,
                    "zero | constant | poiseuille | path to a y,U CSV")
        ->capture_default_str();
    cmd->add_option("--gamma", cfg.gamma, "vorticity slope for the constant profile")
        ->capture_default_str();
    cmd->add_option("--g", cfg.g, "gravitational acceleration [m/s^2]")
        ->capture_default_str();
    cmd->add_option("--h0", cfg.h0, "undisturbed depth [m] (analytic profiles)")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    presurf::cli::RunConfig cfg;
    double c_value = 0.0;

    CLI::App app{"Surface wave reconstruction from bed pressure over a shear flow"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file (flags win)");
    app.fallthrough();

    auto* disp = app.add_subcommand("dispersion",
                                    "bifurcation and Burns wave speeds for a profile");
    add_profile_options(disp, cfg);
    disp->add_option("--k", cfg.k, "wavenumber [1/m]")->capture_default_str();
    disp->add_option("--c", c_value, "wave speed override [m/s]");

    auto* stokes = app.add_subcommand("stokes", "periodic reconstruction from a pressure trace");
    add_profile_options(stokes, cfg);
    stokes->add_option("--k", cfg.k, "fundamental wavenumber [1/m]")->capture_default_str();
    stokes->add_option("--order", cfg.order, "reconstruction order (1 or 2)")
        ->capture_default_str();
    stokes->add_option("--eps", cfg.eps, "amplitude parameter for assembly")
        ->capture_default_str();
    stokes->add_option("--input", cfg.input_path, "trace CSV x,p1[,p2]")->required();
    stokes->add_option("--out", cfg.output_path, "output CSV")->capture_default_str();
    stokes->add_option("--x-points", cfg.x_points, "output nodes per period")
        ->capture_default_str();
    stokes->add_option("--y-steps", cfg.y_steps, "Cauchy-problem RK4 steps")
        ->capture_default_str();
    stokes->add_option("--c", c_value, "wave speed override [m/s]");

    auto* sol = app.add_subcommand("solitary", "solitary reconstruction from decaying traces");
    add_profile_options(sol, cfg);
    sol->add_option("--order", cfg.order, "reconstruction order (1, 2 or 3)")
        ->capture_default_str();
    sol->add_option("--eps", cfg.eps, "amplitude parameter; x_phys = x/sqrt(eps)")
        ->capture_default_str();
    sol->add_option("--input", cfg.input_path, "trace CSV x,p1[,p2[,p3]]")->required();
    sol->add_option("--out", cfg.output_path, "output CSV")->capture_default_str();
    sol->add_option("--derivatives", cfg.derivatives_path,
                    "analytic derivative CSV x,d1,d2,d3,d4 for b1");
    sol->add_option("--y-nodes", cfg.y_nodes, "depth grid nodes")->capture_default_str();
    sol->add_option("--decay-tol", cfg.decay_tol, "relative decay tolerance at the trace ends")
        ->capture_default_str();
    sol->add_option("--c", c_value, "wave speed override [m/s]");

    auto* exact = app.add_subcommand(
        "exact", "implicit zero-vorticity surface solve from a periodic trace");
    exact->add_option("--g", cfg.g, "gravitational acceleration [m/s^2]")
        ->capture_default_str();
    exact->add_option("--h0", cfg.h0, "undisturbed depth [m]")->capture_default_str();
    exact->add_option("--k", cfg.k, "wavenumber [1/m]")->capture_default_str();
    exact->add_option("--input", cfg.input_path, "trace CSV x,p1")->required();
    exact->add_option("--out", cfg.output_path, "output CSV")->capture_default_str();
    exact->add_option("--tol", cfg.tol, "fixed-point stopping tolerance")
        ->capture_default_str();
    exact->add_option("--max-iter", cfg.max_iter, "fixed-point iteration cap")
        ->capture_default_str();
    exact->add_option("--relax", cfg.relax, "under-relaxation factor")->capture_default_str();
    exact->add_option("--c", c_value, "wave speed override [m/s]");

    auto* cmp = app.add_subcommand("compare", "reference comparison tables");
    cmp->add_option("--case", cfg.compare_case, "stokes | solitary")->capture_default_str();
    cmp->add_option("--b", cfg.b, "cosine / sech^2 amplitude")->capture_default_str();
    cmp->add_option("--g", cfg.g, "gravitational acceleration [m/s^2]")
        ->capture_default_str();
    cmp->add_option("--out", cfg.output_path, "output CSV")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (disp->parsed()) cfg.mode = presurf::cli::Mode::dispersion;
    if (stokes->parsed()) cfg.mode = presurf::cli::Mode::stokes;
    if (sol->parsed()) cfg.mode = presurf::cli::Mode::solitary;
    if (exact->parsed()) cfg.mode = presurf::cli::Mode::exact;
    if (cmp->parsed()) cfg.mode = presurf::cli::Mode::compare;

    for (CLI::App* sub : {disp, stokes, sol, exact}) {
        if (sub->parsed() && sub->count("--c") > 0) cfg.c_override = c_value;
    }

    try {
        presurf::cli::run(cfg, std::cout);
    } catch (const presurf::Error& e) {
        std::cerr << e.what() << "\n";
        return e.category() == presurf::Error::Category::input ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
