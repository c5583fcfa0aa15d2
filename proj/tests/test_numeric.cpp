#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hardylab/numeric.hpp"

using namespace hardylab;

TEST_CASE("adaptive quadrature on smooth integrands") {
    auto e = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(e.value == doctest::Approx(2.0).epsilon(1e-12));
    auto g = integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
    CHECK(g.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("quadrature handles kinks by subdivision") {
    auto e = integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0);
    double exact = 0.5 * (0.3 * 0.3 + 0.7 * 0.7);
    CHECK(e.value == doctest::Approx(exact).epsilon(1e-10));
}

TEST_CASE("power-log endpoint integrals") {
    // plain power: int_0^1 t^a dt = 1/(a+1)
    for (double a : {-0.5, -0.9, -0.99}) {
        auto e = integrate_power_log_zero(a, 0.0, 1.0, [](double) { return 1.0; }, 1.0);
        CHECK(e.value == doctest::Approx(1.0 / (a + 1.0)).epsilon(1e-9));
    }
    // int_0^1 (1 - log t) dt = 2  (integrand = t^0 X^{-1})
    auto e = integrate_power_log_zero(0.0, -1.0, 1.0, [](double) { return 1.0; }, 1.0);
    CHECK(e.value == doctest::Approx(2.0).epsilon(1e-10));
    // logarithmic borderline: int_0^1 t^{-1} X^2(t) dt = 1
    auto b = integrate_power_log_zero(-1.0, 2.0, 1.0, [](double) { return 1.0; }, 1.0);
    CHECK(b.value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("divergent exponents are refused") {
    CHECK_THROWS_AS(
        integrate_power_log_zero(-1.5, 0.0, 1.0, [](double) { return 1.0; }, 1.0),
        DivergenceError);
    CHECK_THROWS_AS(
        integrate_power_log_zero(-1.0, 1.0, 1.0, [](double) { return 1.0; }, 1.0),
        DivergenceError);
}

TEST_CASE("unit ball volumes") {
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0));
    CHECK(unit_ball_volume(2) == doctest::Approx(std::numbers::pi));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * std::numbers::pi / 3.0));
}

TEST_CASE("smooth step is a C-infinity switch") {
    CHECK(smooth_step(-1.0) == 0.0);
    CHECK(smooth_step(2.0) == 1.0);
    CHECK(smooth_step(0.5) == doctest::Approx(0.5));
    // derivative consistent with central differences
    for (double t : {0.2, 0.5, 0.8}) {
        double h = 1e-6;
        double fd = (smooth_step(t + h) - smooth_step(t - h)) / (2 * h);
        CHECK(smooth_step_deriv(t) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("estimate division propagates error") {
    Estimate num{2.0, 1e-6}, den{4.0, 1e-6};
    Estimate q = divide(num, den);
    CHECK(q.value == doctest::Approx(0.5));
    CHECK(q.error > 0);
    CHECK_THROWS_AS(divide(num, Estimate{0.0, 0.0}), NumericError);
}
