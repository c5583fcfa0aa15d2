#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "hardylab/numeric.hpp"
#include "hardylab/profiles.hpp"

using namespace hardylab;

namespace {

// derivative oracle: central differences away from breakpoints
void check_derivative(const Profile& u, double lo, double hi, int samples = 200,
                      double tol = 1e-6) {
    auto bps = u.breakpoints();
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int done = 0;
    while (done < samples) {
        double t = lo + (hi - lo) * unit(rng);
        double h = 1e-7 * std::max(1.0, std::abs(t));
        bool near_break = false;
        for (double b : bps)
            if (std::abs(t - b) < 8 * h) near_break = true;
        if (near_break) continue;
        ++done;
        double fd = (u.value(t + h) - u.value(t - h)) / (2 * h);
        double an = u.deriv(t);
        double scale = std::max({1.0, std::abs(an), std::abs(fd)});
        CHECK(std::abs(an - fd) <= tol * scale);
    }
}

} // namespace

TEST_CASE("power family point values") {
    Profile u = power_family(2.0, 2.0, 0.5);
    CHECK(u.value(1.0) == doctest::Approx(1.0));
    CHECK(u.value(0.25) == doctest::Approx(0.25));
    CHECK(u.deriv(0.25) == doctest::Approx(1.0));
    CHECK_THROWS_AS(power_family(2.0, 2.0, 0.0), ParameterError);
    check_derivative(u, 0.01, 2.0);
}

TEST_CASE("power family with boundary localization") {
    Profile u = power_family(2.0, 2.0, 0.5, CutoffSpec{CutoffSpec::Kind::NearZero, 0.4});
    CHECK(u.value(0.1) == doctest::Approx(0.1));   // inside the plateau
    CHECK(u.value(0.5) == doctest::Approx(0.0));   // beyond the cutoff
    check_derivative(u, 0.01, 0.6);
}

TEST_CASE("annulus indicator and its jump set") {
    Profile u = annulus_indicator(0.1, 0.5);
    CHECK(u.value(0.3) == 1.0);
    CHECK(u.value(0.05) == 0.0);
    CHECK(u.value(0.7) == 0.0);
    REQUIRE(u.jumps().size() == 2);
    CHECK(u.jumps()[0].location == doctest::Approx(0.1));
    CHECK(u.jumps()[0].magnitude == doctest::Approx(1.0));
    CHECK(u.jumps()[1].location == doctest::Approx(0.5));
    CHECK(u.jumps()[1].magnitude == doctest::Approx(-1.0));
    CHECK_THROWS_AS(annulus_indicator(0.5, 0.1), ParameterError);
}

TEST_CASE("shell indicator") {
    Profile u = shell_indicator(0.2);
    CHECK(u.value(0.5) == 1.0);
    CHECK(u.value(0.9) == 0.0);
    REQUIRE(u.jumps().size() == 1);
    CHECK(u.jumps()[0].location == doctest::Approx(0.8));
    CHECK(u.jumps()[0].magnitude == doctest::Approx(-1.0));
}

TEST_CASE("mollifier mass is normalized") {
    Profile a = annulus_indicator(0.2, 0.8);
    Profile m = mollify(a, 0.05);
    // the mollified profile equals 1 strictly inside
    CHECK(m.value(0.5) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(m.value(0.26) == doctest::Approx(1.0).epsilon(1e-10));
    // smooth interpolation across the old jump
    CHECK(m.value(0.2) == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(m.value(0.14) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(m.jumps().empty());
    check_derivative(m, 0.16, 0.9, 60, 1e-5);
}

TEST_CASE("mollify preconditions") {
    Profile a = annulus_indicator(0.2, 0.8);
    CHECK_THROWS_AS(mollify(a, 0.4), ParameterError);  // wider than half the gap
    Profile tight = annulus_indicator(0.05, 0.8);
    CHECK_THROWS_AS(mollify(tight, 0.07), ParameterError); // would cross zero
}

TEST_CASE("six-piece profile: continuity and the printed point values") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (auto [n, p] : std::vector<std::pair<int, double>>{{1, 2.0}, {2, 4.0}, {3, 5.5}}) {
        for (double delta : {0.25, 0.1, 0.03}) {
            Profile u = sixpiece_hardy_morrey(delta, p, n);
            double H = (p - n) / p;
            // continuity at the five interior breakpoints
            for (int k = 2; k <= 6; ++k) {
                double b = std::pow(delta, k - 1);
                double below = u.value(b * (1 - 1e-10));
                double above = u.value(b * (1 + 1e-10));
                CHECK(below == doctest::Approx(above).epsilon(1e-7));
            }
            // value at |x| = delta^2 from both sides equals delta^{3H}
            CHECK(u.value(delta * delta) == doctest::Approx(std::pow(delta, 3 * H)));
            // value at |x| = delta^3 equals delta^{4H} (1 + H log(1/delta))
            CHECK(u.value(std::pow(delta, 3)) ==
                  doctest::Approx(std::pow(delta, 4 * H) *
                                  (1.0 + H * std::log(1.0 / delta))));
            // vanishes at the outer edge
            CHECK(u.value(1.0) == doctest::Approx(0.0));
        }
    }
    Profile u = sixpiece_hardy_morrey(0.1, 4.0, 2);
    check_derivative(u, 2e-6, 1.0, 300);
    CHECK_THROWS_AS(sixpiece_hardy_morrey(1.2, 4.0, 2), ParameterError);
    CHECK_THROWS_AS(sixpiece_hardy_morrey(0.1, 2.0, 3), ParameterError);
}

TEST_CASE("extremal families") {
    Profile V = extremal_morrey_V(1.0, 0.8, 4.0, 2);
    CHECK(V.value(0.8) == doctest::Approx(0.0));
    CHECK(V.value(0.0) == doctest::Approx(std::pow(0.8, 2.0 / 3.0)));
    CHECK(V.value(0.9) == 0.0);
    check_derivative(V, 0.01, 0.79);

    Profile U = extremal_sobolev_U(2.0, 1.0, 3.0, 2);
    CHECK(U.value(0.0) == doctest::Approx(2.0));
    check_derivative(U, 0.05, 3.0);

    Profile B = brv_family(3.0, 2, 0.25);
    CHECK(B.value(1.0 - 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(B.value(1.0 + 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
    check_derivative(B, 0.01, 4.0);
}

TEST_CASE("strip tensor profile and its scaling laws") {
    for (int n : {2, 3, 4}) {
        TensorProfile tp = strip_tensor(0.05, 0.5, 0.3, n);
        CHECK(tp.K1 > 0);
        CHECK(tp.M1 > 0);
        // K_delta / M_delta = (K1/M1) delta, exactly
        CHECK(tp.Kd() / tp.Md() == doctest::Approx((tp.K1 / tp.M1) * tp.scale).epsilon(1e-14));
        // scaling laws are exact powers
        CHECK(tp.Kd() == doctest::Approx(std::pow(0.3, 2.0 - n) * tp.K1));
        CHECK(tp.Md() == doctest::Approx(std::pow(0.3, 1.0 - n) * tp.M1));
    }
    // one-dimensional transverse bump: K1 = 2 max(phi) = 2/e
    TensorProfile tp2 = strip_tensor(0.05, 0.5, 1.0, 2);
    CHECK(tp2.K1 == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-9));
    CHECK_THROWS_AS(strip_tensor(0.5, 0.05, 1.0, 2), ParameterError);
}

TEST_CASE("profile transforms") {
    Profile u = power_family(3.0, 2.0, 0.5); // d^{1.5}
    Profile v = u.multiplied_by_power(-1.0, 2.0); // 2 d^{0.5}
    CHECK(v.value(0.25) == doctest::Approx(2.0 * 0.5));
    check_derivative(v, 0.01, 2.0);

    Profile w = abs_pow_times_power(u, 2.0, -1.0); // d^{3-1} = d^2
    CHECK(w.value(0.5) == doctest::Approx(0.25));
    check_derivative(w, 0.01, 2.0);

    Profile r = u.rescaled(2.0); // (d/2)^{1.5}
    CHECK(r.value(1.0) == doctest::Approx(std::pow(0.5, 1.5)));
    check_derivative(r, 0.01, 2.0);

    Profile c = u.restricted(0.2, 0.7);
    CHECK(c.value(0.5) == u.value(0.5));
    CHECK(c.value(0.1) == 0.0);
    CHECK(c.value(0.8) == 0.0);
}

TEST_CASE("family parser") {
    Profile u = make_profile("power", {{"s", 2.0}, {"q", 2.0}, {"eps", 0.5}});
    CHECK(u.value(0.25) == doctest::Approx(0.25));
    CHECK_THROWS_AS(make_profile("power", {{"s", 2.0}}), ParameterError);
    CHECK_THROWS_AS(make_profile("nonsense", {}), ParameterError);
}

TEST_CASE("informational: the printed first extremal family is not energy-finite") {
    // The first extremal family as printed (exponent 1 - 1/p on the radius)
    // has a divergent gradient integral on the whole space; recorded here as
    // an informational check, not an optimality assertion.
    Profile U = extremal_sobolev_U(1.0, 1.0, 2.0, 3);
    auto tail = [&](double R) {
        return integrate(
                   [&](double r) {
                       double d = U.deriv(r);
                       return d * d * r * r;
                   },
                   1.0, R, {})
            .value;
    };
    double t10 = tail(10.0), t100 = tail(100.0), t1000 = tail(1000.0);
    CHECK(t100 > 2.0 * t10);
    CHECK(t1000 > 2.0 * t100); // grows like sqrt(R): no finite limit
    MESSAGE("gradient energy through R = 10, 100, 1000: ", t10, ", ", t100, ", ", t1000);
}
