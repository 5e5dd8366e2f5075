#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "presurf/differentiate.hpp"
#include "presurf/rayleigh.hpp"
#include "presurf/shear.hpp"

#include "test_helpers.hpp"

using namespace presurf;
using test_helpers::normalized_max_error;

namespace {

// brute-force Burns oracle: dense trapezoid quadrature plus plain bisection,
// independent of the library's quadrature and root finder
double burns_oracle(const ShearProfile& profile, double g) {
    const auto condition = [&](double c) {
        const std::size_t n = 100000;
        const double h = profile.h0() / static_cast<double>(n);
        double sum = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            const double y = h * static_cast<double>(i);
            const double d = profile.eval(y).u - c;
            const double w = (i == 0 || i == n) ? 0.5 : 1.0;
            sum += w / (d * d);
        }
        return sum * h - 1.0 / g;
    };
    double lo = profile.max_velocity() + 0.05, hi = profile.max_velocity() + 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (condition(lo) * condition(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("Cauchy solution for zero shear is a sinh profile", "[rayleigh]") {
    const double b = 0.1, c = 2.0;
    const auto profile = ShearProfile::zero(1.0);
    const WaveParameters params{9.81, 1.0, 1.0, c, 1.0};

    const auto sol = rayleigh::solve_cauchy(profile, params, 1, b / c);
    CHECK(sol.phi.values.front() == 0.0);
    CHECK(sol.dphi.values.front() == b / c);
    CHECK(normalized_max_error(sol.phi, [&](double) { return 0.0; }) ==
          sol.phi.max_abs());  // sanity: nonzero
    double err = 0.0;
    for (std::size_t i = 0; i < sol.phi.size(); ++i) {
        const double y = sol.phi.grid.coordinate(i);
        err = std::max(err, std::abs(sol.phi[i] - b / c * std::sinh(y)));
    }
    CHECK(err < 1e-9);
}

TEST_CASE("zero Cauchy data gives the zero solution", "[rayleigh]") {
    const auto profile = ShearProfile::poiseuille(1.0);
    const WaveParameters params{9.81, 1.0, 1.0, 4.0, 1.0};
    const auto sol = rayleigh::solve_cauchy(profile, params, 1, 0.0);
    CHECK(sol.phi.max_abs() == 0.0);
    CHECK(sol.dphi.max_abs() == 0.0);
}

TEST_CASE("second-harmonic Cauchy solution for zero shear", "[rayleigh]") {
    const double b = 0.1, c = 2.0;
    const auto profile = ShearProfile::zero(1.0);
    const WaveParameters params{9.81, 1.0, 1.0, c, 1.0};
    const double slope = -b * b / (4.0 * c * c * c);
    const auto sol = rayleigh::solve_cauchy(profile, params, 2, slope);
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < sol.phi.size(); ++i) {
        const double y = sol.phi.grid.coordinate(i);
        const double ref = -b * b / (8.0 * c * c * c) * std::sinh(2.0 * y);
        err = std::max(err, std::abs(sol.phi[i] - ref));
        scale = std::max(scale, std::abs(ref));
    }
    CHECK(err / scale < 1e-9);
}

TEST_CASE("Cauchy solve is linear in slope and forcing", "[rayleigh][property]") {
    const auto profile = ShearProfile::poiseuille(1.0);
    const WaveParameters params{9.81, 1.0, 1.0, 4.2, 1.0};
    const Grid1D ygrid = rayleigh::default_y_grid(1.0);
    const auto forcing =
        SampledFunction::from(ygrid, [](double y) { return std::sin(3.0 * y) + 0.2; });
    SampledFunction scaled_forcing(ygrid, forcing.values);
    const double alpha = 3.7;
    for (double& v : scaled_forcing.values) v *= alpha;

    const auto sol = rayleigh::solve_cauchy(profile, params, 1, 0.3, &forcing);
    const auto scaled = rayleigh::solve_cauchy(profile, params, 1, alpha * 0.3, &scaled_forcing);
    double err = 0.0;
    for (std::size_t i = 0; i < sol.phi.size(); ++i)
        err = std::max(err, std::abs(scaled.phi[i] - alpha * sol.phi[i]));
    CHECK(err / (std::abs(alpha) * sol.phi.max_abs()) < 1e-10);
}

TEST_CASE("Cauchy solution satisfies the modal equation", "[rayleigh][property]") {
    // residual of (U-c)(phi'' - n^2 k^2 phi) - U'' phi - F by finite differences
    const auto profile = ShearProfile::poiseuille(1.0);
    const double c = 4.2;
    const WaveParameters params{9.81, 1.0, 1.0, c, 1.0};
    const Grid1D ygrid = rayleigh::default_y_grid(1.0);
    const auto forcing =
        SampledFunction::from(ygrid, [](double y) { return 0.3 * std::cos(2.0 * y); });
    const auto sol = rayleigh::solve_cauchy(profile, params, 2, 0.7, &forcing);

    const auto ddphi = fd_derivative(sol.dphi, 1);
    double res = 0.0;
    for (std::size_t i = 0; i < ygrid.count; ++i) {
        const double y = ygrid.coordinate(i);
        const ShearEval s = profile.eval(y);
        const double lhs = (s.u - c) * (ddphi[i] - 4.0 * sol.phi[i]) - s.ddu * sol.phi[i];
        res = std::max(res, std::abs(lhs - forcing[i]));
    }
    CHECK(res <= 1e-6 * sol.phi.max_abs());
}

TEST_CASE("bifurcation speed reproduces the zero-shear dispersion relation", "[rayleigh]") {
    const double g = 9.81, h0 = 1.0;
    const auto profile = ShearProfile::zero(h0);
    for (const double k : {1.0, 10.0}) {
        const auto r = rayleigh::bifurcation_speed(profile, g, h0, k);
        CHECK_FALSE(r.multiple_roots);
        const double ref = std::sqrt(g * std::tanh(k * h0) / k);
        CHECK(r.c == Catch::Approx(ref).epsilon(1e-8));
        CHECK(rayleigh::dispersion_zero(g, h0, k) == Catch::Approx(ref).epsilon(1e-14));
    }
}

TEST_CASE("bifurcation speed matches the constant-vorticity closed form", "[rayleigh]") {
    const double g = 9.81, h0 = 1.0, k = 1.0;
    for (const double gamma : {1.0, -1.0}) {
        const auto profile = ShearProfile::constant_vorticity(gamma, h0);
        const auto r = rayleigh::bifurcation_speed(profile, g, h0, k);
        const double ref = rayleigh::dispersion_constant_vorticity(gamma, g, h0, k);
        CHECK(r.c == Catch::Approx(ref).epsilon(1e-8));
    }
    // gamma = 0 degenerates to the zero-shear relation
    CHECK(rayleigh::dispersion_constant_vorticity(0.0, 9.81, 1.0, 1.0) ==
          Catch::Approx(rayleigh::dispersion_zero(9.81, 1.0, 1.0)).epsilon(1e-14));
}

TEST_CASE("long-wave limit of the bifurcation speed is the Burns speed",
          "[rayleigh][property]") {
    const double g = 9.81, h0 = 1.0, k = 1e-3;
    const auto zero = ShearProfile::zero(h0);
    CHECK(rayleigh::bifurcation_speed(zero, g, h0, k).c ==
          Catch::Approx(rayleigh::burns_speed(zero, g)).margin(1e-4));

    const auto cv = ShearProfile::constant_vorticity(1.0, h0);
    CHECK(rayleigh::bifurcation_speed(cv, g, h0, k).c ==
          Catch::Approx(rayleigh::burns_speed(cv, g)).margin(1e-4));
}

TEST_CASE("Burns speed closed forms and quadrature oracle", "[rayleigh]") {
    const double g = 9.81, h0 = 1.0;
    const auto zero = ShearProfile::zero(h0);
    CHECK(rayleigh::burns_speed(zero, g) == Catch::Approx(std::sqrt(g * h0)).margin(1e-10));

    const auto cv = ShearProfile::constant_vorticity(1.0, h0);
    const double quad_root = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * g * h0));
    CHECK(rayleigh::burns_speed(cv, g) == Catch::Approx(quad_root).epsilon(1e-8));
    CHECK(rayleigh::burns_constant_vorticity(1.0, g, h0) ==
          Catch::Approx(quad_root).epsilon(1e-14));

    const auto pois = ShearProfile::poiseuille(h0);
    CHECK(rayleigh::burns_speed(pois, g) ==
          Catch::Approx(burns_oracle(pois, g)).epsilon(1e-8));
    CHECK(rayleigh::burns_speed(pois, g) > pois.max_velocity());
}

TEST_CASE("speed contracts are enforced", "[rayleigh][errors]") {
    const auto profile = ShearProfile::poiseuille(1.0);
    const WaveParameters params{9.81, 1.0, 1.0, 0.5, 1.0};  // below max U = 1
    CHECK_THROWS_AS(rayleigh::solve_cauchy(profile, params, 1, 1.0),
                    SupercriticalityViolation);
    CHECK_THROWS_AS(rayleigh::bifurcation_speed(profile, 9.81, 1.0, 1.0, {0.5, 10.0}),
                    SupercriticalityViolation);
    // a bracket strictly above every root: the condition cannot change sign
    CHECK_THROWS_AS(rayleigh::burns_speed(profile, 9.81, {50.0, 80.0}), NoSignChange);
}
