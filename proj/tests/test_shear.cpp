#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "presurf/shear.hpp"

using namespace presurf;

TEST_CASE("analytic profiles evaluate exactly", "[shear]") {
    const auto zero = ShearProfile::zero(1.0);
    const auto z = zero.eval(0.5);
    CHECK(z.u == 0.0);
    CHECK(z.du == 0.0);
    CHECK(z.ddu == 0.0);

    const auto cv = ShearProfile::constant_vorticity(2.0, 1.0);
    const auto c = cv.eval(0.3);
    CHECK(c.u == Catch::Approx(0.6).margin(1e-15));
    CHECK(c.du == 2.0);
    CHECK(c.ddu == 0.0);

    const auto pois = ShearProfile::poiseuille(1.0);
    const auto p = pois.eval(0.5);
    CHECK(p.u == Catch::Approx(0.75).margin(1e-15));
    CHECK(p.du == Catch::Approx(-1.0).margin(1e-15));
    CHECK(p.ddu == -2.0);
}

TEST_CASE("eval rejects points outside the water column", "[shear][errors]") {
    const auto p = ShearProfile::poiseuille(1.0);
    CHECK_THROWS_AS(p.eval(-0.1), OutOfDomain);
    CHECK_THROWS_AS(p.eval(1.1), OutOfDomain);
    CHECK_NOTHROW(p.eval(1.0));
    CHECK_NOTHROW(p.eval(0.0));
}

TEST_CASE("max_velocity closed forms", "[shear]") {
    CHECK(ShearProfile::zero(2.0).max_velocity() == 0.0);
    CHECK(ShearProfile::constant_vorticity(2.0, 1.0).max_velocity() == Catch::Approx(2.0));
    CHECK(ShearProfile::constant_vorticity(-1.0, 1.0).max_velocity() == 0.0);
    CHECK(ShearProfile::poiseuille(1.0).max_velocity() == Catch::Approx(1.0));
}

TEST_CASE("tabulated profile matches the analytic kinds", "[shear][property]") {
    // polynomial kinds are reproduced exactly by the not-a-knot spline; a
    // sinusoidal profile probes the interpolation error bounds
    const double h0 = 1.0;
    const Grid1D g = Grid1D::over(0.0, h0, 51);

    const auto pois = ShearProfile::poiseuille(h0);
    const auto tab_pois =
        ShearProfile::tabulated(SampledFunction::from(g, [&](double y) { return pois.eval(y).u; }));
    double u_err = 0.0, ddu_err = 0.0;
    for (int i = 0; i <= 500; ++i) {
        const double y = h0 * i / 500.0;
        u_err = std::max(u_err, std::abs(tab_pois.eval(y).u - pois.eval(y).u));
        ddu_err = std::max(ddu_err, std::abs(tab_pois.eval(y).ddu - pois.eval(y).ddu));
    }
    CHECK(u_err < 1e-6);
    CHECK(ddu_err < 1e-4);

    const auto wavy = [](double y) { return 0.1 * std::sin(std::numbers::pi * y); };
    const Grid1D g_fine = Grid1D::over(0.0, h0, 151);  // U'' error is O(h^2)
    const auto tab_wavy = ShearProfile::tabulated(SampledFunction::from(g_fine, wavy));
    u_err = 0.0;
    ddu_err = 0.0;
    for (int i = 0; i <= 500; ++i) {
        const double y = h0 * i / 500.0;
        const double pi2 = std::numbers::pi * std::numbers::pi;
        u_err = std::max(u_err, std::abs(tab_wavy.eval(y).u - wavy(y)));
        ddu_err = std::max(ddu_err, std::abs(tab_wavy.eval(y).ddu + pi2 * wavy(y)));
    }
    CHECK(u_err < 1e-6);
    CHECK(ddu_err < 1e-4);
}

TEST_CASE("tabulated max_velocity dominates the samples", "[shear][property]") {
    const double h0 = 1.0;
    const Grid1D g = Grid1D::over(0.0, h0, 81);
    // interior maximum away from any knot
    const auto hump = [](double y) { return y * (1.0 - y) * (1.3 - y); };
    const auto tab = ShearProfile::tabulated(SampledFunction::from(g, hump));
    const double m = tab.max_velocity();
    for (std::size_t i = 0; i < g.count; ++i) CHECK(m >= hump(g.coordinate(i)) - 1e-12);

    const auto pois = ShearProfile::poiseuille(h0);
    const auto tab_pois =
        ShearProfile::tabulated(SampledFunction::from(g, [&](double y) { return pois.eval(y).u; }));
    CHECK(tab_pois.max_velocity() == Catch::Approx(h0 * h0).margin(1e-9));
}

TEST_CASE("tabulated profile construction contracts", "[shear][errors]") {
    CHECK_THROWS_AS(ShearProfile::tabulated({0.5, 0.6, 0.8, 1.0}, {0.0, 0.1, 0.2, 0.3}),
                    InvalidInput);  // must start at 0
    CHECK_THROWS_AS(ShearProfile::tabulated({0.0, 0.5, 1.0}, {0.0, 0.1, 0.2}), GridTooSmall);
    CHECK_THROWS_AS(ShearProfile::zero(-1.0), InvalidInput);
}
