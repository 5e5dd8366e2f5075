#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "presurf/differentiate.hpp"
#include "presurf/grid.hpp"
#include "presurf/ode.hpp"
#include "presurf/quadrature.hpp"
#include "presurf/root_find.hpp"
#include "presurf/spline.hpp"

#include "test_helpers.hpp"

using namespace presurf;
using test_helpers::max_abs_error;

namespace {
constexpr double pi = std::numbers::pi;

IvpSolution solve_const_coeff(double a, double phi0, double dphi0, double y_end,
                              std::size_t steps) {
    return integrate_second_order_ivp(
        [a](double) { return std::pair<double, double>{a, 0.0}; }, phi0, dphi0,
        Grid1D::over(0.0, y_end, steps + 1));
}
}  // namespace

TEST_CASE("grid invariants", "[numerics]") {
    CHECK_THROWS_AS(Grid1D(0.0, -1.0, 10), InvalidInput);
    CHECK_THROWS_AS(Grid1D(0.0, 1.0, 1), GridTooSmall);
    const Grid1D g = Grid1D::over(-2.0, 2.0, 5);
    CHECK(g.coordinate(2) == Catch::Approx(0.0).margin(1e-15));
    CHECK(g.back() == Catch::Approx(2.0));
    CHECK_THROWS_AS(SampledFunction(g, {1.0, 2.0}), InvalidInput);
    CHECK_THROWS_AS(SampledFunction(g, {1.0, 2.0, std::nan(""), 0.0, 0.0}), InvalidInput);
}

TEST_CASE("RK4 solves phi'' = phi to sinh", "[numerics][ode]") {
    const auto sol = solve_const_coeff(1.0, 0.0, 1.0, 1.0, 2000);
    CHECK(sol.phi.values.back() == Catch::Approx(std::sinh(1.0)).margin(1e-10));
    CHECK(sol.dphi.values.back() == Catch::Approx(std::cosh(1.0)).margin(1e-10));
}

TEST_CASE("RK4 keeps constants constant", "[numerics][ode]") {
    const auto sol = solve_const_coeff(0.0, 3.0, 0.0, 1.0, 100);
    for (double v : sol.phi.values) CHECK(v == Catch::Approx(3.0).margin(1e-14));
}

TEST_CASE("RK4 solves phi'' = -4 phi to sin(2y)", "[numerics][ode]") {
    // phi(y) = sin(2y); at y = pi/4 the value is exactly 1
    const auto sol = solve_const_coeff(-4.0, 0.0, 2.0, pi / 4.0, 2000);
    CHECK(sol.phi.values.back() == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("RK4 global error decreases as O(h^4)", "[numerics][ode][property]") {
    const auto err = [](std::size_t steps) {
        const auto sol = solve_const_coeff(1.0, 0.0, 1.0, 1.0, steps);
        return std::abs(sol.phi.values.back() - std::sinh(1.0));
    };
    const double e100 = err(100), e200 = err(200);
    CHECK(e100 / e200 >= 8.0);
}

TEST_CASE("RK4 rejects non-finite coefficients", "[numerics][ode][errors]") {
    CHECK_THROWS_AS(integrate_second_order_ivp(
                        [](double y) {
                            return std::pair<double, double>{1.0 / (y - 0.5), 0.0};
                        },
                        0.0, 1.0, Grid1D::over(0.0, 1.0, 101)),
                    NonFiniteCoefficient);
}

TEST_CASE("Simpson integrates sin over a period half", "[numerics][quad]") {
    const Grid1D g = Grid1D::over(0.0, pi, 1001);
    const auto f = SampledFunction::from(g, [](double x) { return std::sin(x); });
    CHECK(simpson(f) == Catch::Approx(2.0).margin(1e-9));
}

TEST_CASE("Simpson is exact for constants", "[numerics][quad]") {
    const double h0 = 0.731;
    const Grid1D g = Grid1D::over(0.0, h0, 400);  // even count: odd interval path
    const auto f = SampledFunction::from(g, [](double) { return 1.0; });
    CHECK(simpson(f) == Catch::Approx(h0).epsilon(1e-14));
}

TEST_CASE("cumulative Simpson hits the antiderivative of y^2", "[numerics][quad]") {
    const Grid1D g = Grid1D::over(0.0, 1.0, 101);
    const auto f = SampledFunction::from(g, [](double y) { return y * y; });
    const auto c = cumulative_simpson(f);
    CHECK(c.values.front() == 0.0);
    CHECK(c.values.back() == Catch::Approx(1.0 / 3.0).margin(1e-8));
    // odd-index nodes carry the corrected-trapezoid value; quadratics are exact
    CHECK(c[1] == Catch::Approx(std::pow(g.coordinate(1), 3) / 3.0).margin(1e-15));
}

TEST_CASE("Simpson error decreases as O(h^4)", "[numerics][quad][property]") {
    const auto err = [](std::size_t nodes) {
        const Grid1D g = Grid1D::over(0.0, pi, nodes);
        const auto f = SampledFunction::from(g, [](double x) { return std::sin(x); });
        return std::abs(simpson(f) - 2.0);
    };
    CHECK(err(251) / err(501) >= 8.0);
}

TEST_CASE("quad requires 3 nodes", "[numerics][quad][errors]") {
    const auto f = SampledFunction::from(Grid1D::over(0.0, 1.0, 2), [](double) { return 1.0; });
    CHECK_THROWS_AS(simpson(f), GridTooSmall);
    CHECK_THROWS_AS(cumulative_simpson(f), GridTooSmall);
}

TEST_CASE("spectral derivative of cos is -sin", "[numerics][differentiate]") {
    const Grid1D g(0.0, 2.0 * pi / 256.0, 256);
    const auto f = SampledFunction::from(g, [](double x) { return std::cos(x); });
    const auto d = differentiate(f, 1, DerivativeMode::periodic);
    CHECK(max_abs_error(d, [](double x) { return -std::sin(x); }) < 1e-10);
}

TEST_CASE("spectral derivative is exact on harmonics", "[numerics][differentiate][property]") {
    const std::size_t count = 128;
    const Grid1D g(0.0, 2.0 * pi / static_cast<double>(count), count);
    for (const int n : {1, 3, 10, 40}) {
        for (const int order : {1, 2, 3, 4}) {
            const auto f =
                SampledFunction::from(g, [n](double x) { return std::cos(n * x); });
            const auto d = differentiate(f, order, DerivativeMode::periodic);
            const double amp = std::pow(static_cast<double>(n), order);
            const auto ref = [n, order, amp](double x) {
                switch (order % 4) {
                    case 0: return amp * std::cos(n * x);
                    case 1: return -amp * std::sin(n * x);
                    case 2: return -amp * std::cos(n * x);
                    default: return amp * std::sin(n * x);
                }
            };
            CHECK(max_abs_error(d, ref) < 1e-8 * amp);
        }
    }
}

TEST_CASE("decaying second derivative of sech^2 at the origin", "[numerics][differentiate]") {
    const Grid1D g = Grid1D::over(-20.0, 20.0, 2001);
    const auto f = SampledFunction::from(g, [](double x) {
        const double s = 1.0 / std::cosh(x);
        return s * s;
    });
    const auto d2 = differentiate(f, 2, DerivativeMode::decaying);
    CHECK(d2[1000] == Catch::Approx(-2.0).margin(1e-6));
}

TEST_CASE("decaying stencils match analytic sech^2 derivatives",
          "[numerics][differentiate][property]") {
    const Grid1D g = Grid1D::over(-20.0, 20.0, 2001);
    const auto sech2 = [](double x) {
        const double s = 1.0 / std::cosh(x);
        return s * s;
    };
    const auto f = SampledFunction::from(g, sech2);
    const auto d1 = differentiate(f, 1, DerivativeMode::decaying);
    const auto d3 = differentiate(f, 3, DerivativeMode::decaying);
    const auto d4 = differentiate(f, 4, DerivativeMode::decaying);
    CHECK(max_abs_error(d1, [&](double x) { return -2.0 * sech2(x) * std::tanh(x); }) < 1e-6);
    CHECK(max_abs_error(d3, [&](double x) {
              const double s2 = sech2(x);
              return (-8.0 * s2 + 24.0 * s2 * s2) * std::tanh(x);
          }) < 2e-5);
    CHECK(max_abs_error(d4, [&](double x) {
              const double s2 = sech2(x);
              return 16.0 * s2 - 120.0 * s2 * s2 + 120.0 * s2 * s2 * s2;
          }) < 2e-4);
}

TEST_CASE("zero trace differentiates to zero", "[numerics][differentiate]") {
    const auto f = SampledFunction::zeros(Grid1D::over(-10.0, 10.0, 101));
    for (int order = 1; order <= 4; ++order) {
        const auto d = differentiate(f, order, DerivativeMode::decaying);
        CHECK(d.max_abs() == 0.0);
    }
}

TEST_CASE("decaying mode rejects non-decaying traces", "[numerics][differentiate][errors]") {
    const auto f =
        SampledFunction::from(Grid1D::over(-20.0, 20.0, 101), [](double x) { return std::cos(x); });
    CHECK_THROWS_AS(differentiate(f, 1, DerivativeMode::decaying), DecayViolation);
}

TEST_CASE("cumulative quad then spectral derivative recovers the integrand",
          "[numerics][property]") {
    const std::size_t count = 1024;
    const Grid1D g(0.0, 2.0 * pi / static_cast<double>(count), count);
    const auto f = SampledFunction::from(
        g, [](double x) { return std::sin(x) + 0.5 * std::cos(2.0 * x); });
    const auto c = cumulative_simpson(f);
    const auto d = differentiate(c, 1, DerivativeMode::periodic);
    CHECK(max_abs_difference(d, f) < 1e-6);
}

TEST_CASE("fd_derivative converges at 4th order including boundaries",
          "[numerics][differentiate][property]") {
    const auto err = [](std::size_t nodes, int order) {
        const Grid1D g = Grid1D::over(0.0, pi, nodes);
        const auto f = SampledFunction::from(g, [](double x) { return std::sin(x); });
        const auto d = fd_derivative(f, order);
        return max_abs_error(d, [order](double x) {
            return order == 1 ? std::cos(x) : -std::sin(x);
        });
    };
    for (const int order : {1, 2}) {
        CHECK(err(801, order) < 1e-9);
        CHECK(err(101, order) / err(201, order) >= 8.0);
    }
}

TEST_CASE("find_root solves classic brackets", "[numerics][root]") {
    CHECK(find_root([](double x) { return x * x - 2.0; }, 1.0, 2.0) ==
          Catch::Approx(std::sqrt(2.0)).margin(1e-10));
    CHECK(find_root([](double x) { return std::cos(x); }, 1.0, 2.0) ==
          Catch::Approx(pi / 2.0).margin(1e-10));
    // zero-shear critical-speed condition h0/c^2 - 1/g
    const double g = 9.81, h0 = 1.0;
    CHECK(find_root([&](double c) { return h0 / (c * c) - 1.0 / g; }, 1.0, 10.0) ==
          Catch::Approx(std::sqrt(g)).margin(1e-8));
}

TEST_CASE("find_root requires a sign change", "[numerics][root][errors]") {
    CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), NoSignChange);
}

TEST_CASE("not-a-knot spline reproduces cubics exactly", "[numerics][spline]") {
    const auto poly = [](double x) { return 2.0 - x + 0.5 * x * x - 0.25 * x * x * x; };
    const auto dpoly = [](double x) { return -1.0 + x - 0.75 * x * x; };
    const auto ddpoly = [](double x) { return 1.0 - 1.5 * x; };
    std::vector<double> x, y;
    for (int i = 0; i <= 20; ++i) {
        x.push_back(0.1 * i);
        y.push_back(poly(x.back()));
    }
    const CubicSpline s(x, y);
    for (double q : {0.0, 0.03, 0.77, 1.5, 1.99, 2.0}) {
        CHECK(s.value(q) == Catch::Approx(poly(q)).margin(1e-12));
        CHECK(s.derivative(q) == Catch::Approx(dpoly(q)).margin(1e-10));
        CHECK(s.second_derivative(q) == Catch::Approx(ddpoly(q)).margin(1e-9));
    }
}

TEST_CASE("spline interpolates smooth functions tightly", "[numerics][spline]") {
    std::vector<double> x, y;
    for (int i = 0; i <= 100; ++i) {
        x.push_back(pi * i / 100.0);
        y.push_back(std::sin(x.back()));
    }
    const CubicSpline s(x, y);
    double err = 0.0, err2 = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double q = pi * i / 1000.0;
        err = std::max(err, std::abs(s.value(q) - std::sin(q)));
        err2 = std::max(err2, std::abs(s.second_derivative(q) + std::sin(q)));
    }
    CHECK(err < 1e-7);
    CHECK(err2 < 1e-3);
}
