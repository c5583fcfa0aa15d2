#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hardylab/sharpness.hpp"

using namespace hardylab;
using doctest::Approx;

TEST_CASE("extrapolation recovers clean power laws") {
    std::vector<SweepPoint> pts;
    for (double t : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6})
        pts.push_back({t, Estimate{3.0 + 0.7 * std::pow(t, 0.8), 0}});
    FitOutcome f = extrapolate(pts, FitModel::Algebraic);
    CHECK(f.limit == Approx(3.0).epsilon(1e-6));
    CHECK(f.rate == Approx(0.8).epsilon(1e-3));
}

TEST_CASE("extrapolation recovers logarithmic approaches") {
    std::vector<SweepPoint> pts;
    for (double t : {1e-2, 1e-3, 1e-4, 1e-5})
        pts.push_back({t, Estimate{2.0 + 0.3 / std::log(1.0 / t), 0}});
    FitOutcome f = extrapolate(pts, FitModel::Logarithmic);
    CHECK(f.limit == Approx(2.0).epsilon(1e-9));
}

TEST_CASE("extrapolation refusals") {
    std::vector<SweepPoint> few = {{1e-2, Estimate{1, 0}}, {1e-3, Estimate{2, 0}}};
    CHECK_THROWS_AS(extrapolate(few, FitModel::Algebraic), ParameterError);
    std::vector<SweepPoint> wobble;
    for (double t : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6})
        wobble.push_back({t, Estimate{1.0 + ((wobble.size() % 2) ? 0.1 : -0.1), 0}});
    CHECK_THROWS_AS(extrapolate(wobble, FitModel::Algebraic), ParameterError);
}

TEST_CASE("punctured quotient sweep extrapolates to the sharp constant") {
    QuadratureConfig q;
    q.rel_tol = 1e-10;
    SweepResult sw = punctured_quotient_sweep(2, 3.0, 0.5, {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}, q);
    REQUIRE(sw.fitted_limit);
    CHECK(*sw.fitted_limit == Approx(1.0).epsilon(0.005));
    // no quotient ever dips below the sharp constant
    for (const auto& p : sw.points) CHECK(p.quotient.value >= sw.target - p.quotient.error);
}

TEST_CASE("ball series quotient spot value and limits") {
    // near delta = 1e-4 the m = 0, beta = s-1 quotient sits within 2% of n-1
    Estimate q = ball_series_quotient(2, 3.5, 0, 2.5, 1e-4);
    CHECK(q.value == Approx(1.0).epsilon(0.02));
    SweepResult sw =
        iterated_ball_series_sweep(3, 3.5, 1, 1.5, {1e-2, 1e-3, 1e-4, 1e-5, 1e-6});
    REQUIRE(sw.fitted_limit);
    CHECK(*sw.fitted_limit == Approx(2.0).epsilon(0.01));
    CHECK_THROWS_AS(iterated_ball_series_sweep(2, 2.5, 1, 0.5, {1e-2, 1e-3, 1e-4, 1e-5}),
                    ParameterError);
}

TEST_CASE("six-piece closed forms match the worked value") {
    // I(A2) for n=2, p=4, delta=0.5
    SixpieceForms f = sixpiece_closed_forms(2, 4.0, 0.5);
    double expect = -(2.0 * std::numbers::pi / 4.0) * (1.0 / 8.0) * 0.25 * 0.75;
    CHECK(f.A2 == Approx(expect).epsilon(1e-12));
    CHECK(f.A2 == Approx(-0.03682).epsilon(1e-3));
    // quadrature agrees piece by piece
    QuadratureConfig q;
    q.rel_tol = 1e-10;
    CHECK(sixpiece_numeric(2, 4.0, 0.5, 2, q).value == Approx(f.A2).epsilon(1e-8));
    CHECK(sixpiece_numeric(2, 4.0, 0.5, 5, q).value == Approx(f.A5).epsilon(1e-8));
    double a16 = sixpiece_numeric(2, 4.0, 0.5, 1, q).value +
                 sixpiece_numeric(2, 4.0, 0.5, 6, q).value;
    CHECK(a16 == Approx(f.A1 + f.A6).epsilon(1e-8));
    double a34 = sixpiece_numeric(2, 4.0, 0.5, 3, q).value +
                 sixpiece_numeric(2, 4.0, 0.5, 4, q).value;
    CHECK(a34 == Approx(f.A3 + f.A4).epsilon(1e-8));
}

TEST_CASE("anchored quotient decays only for positive epsilon") {
    QuadratureConfig q;
    double q0a = sixpiece_anchored_quotient(2, 4.0, 1e-2, 0.0, 2.0, q);
    double q0b = sixpiece_anchored_quotient(2, 4.0, 1e-4, 0.0, 2.0, q);
    CHECK(q0b > 0.5 * q0a); // the critical exponent is stable
    double qe_a = sixpiece_anchored_quotient(2, 4.0, 1e-2, 0.1, 2.0, q);
    double qe_b = sixpiece_anchored_quotient(2, 4.0, 1e-4, 0.1, 2.0, q);
    CHECK(qe_b < qe_a);
}

TEST_CASE("strip quotients collapse in all three exponent ranges") {
    TensorProfile tp = strip_tensor(0.01, 0.5, 1.0, 3);
    for (double s : {1.5, 2.0, 3.0}) {
        double first = strip_qtilde(3, s, 0.5, 1e-2, 0.5, tp.K1, tp.M1);
        double last = strip_qtilde(3, s, 0.5, 1e-6, 0.5, tp.K1, tp.M1);
        CAPTURE(s);
        CHECK(last <= 0.1 * first);
    }
    CHECK_THROWS_AS(strip_qtilde(3, 2.0, 1.5, 1e-2, 0.5, tp.K1, tp.M1), ParameterError);
}

TEST_CASE("failure demonstrations decay by a decade; the proved variants survive") {
    FailureDemo d = optimality_failure("gen-x-gamma1", {{"n", 2.0}, {"s", 3.0}});
    CHECK(d.decade);
    CHECK(d.reference.back().quotient.value >
          0.1 * d.reference.front().quotient.value);

    FailureDemo g = optimality_failure("gen-grad-exponent", {{"n", 2.0}, {"s", 3.0}});
    CHECK(g.decade);
    // the eps = 0 reference tends to eta^{n-s} = 2
    CHECK(g.reference.back().quotient.value == Approx(2.0).epsilon(0.01));

    FailureDemo b = optimality_failure("ball-series-gamma1", {{"n", 2.0}, {"s", 2.5}});
    CHECK(b.decade);

    CHECK_THROWS_AS(optimality_failure("made-up-case", {}), RegistryError);
}

TEST_CASE("target table is shipped") {
    const auto& targets = sharp_targets();
    CHECK(targets.size() >= 7);
    bool has_quarter = false;
    for (const auto& t : targets)
        if (t.formula == "1/4") has_quarter = true;
    CHECK(has_quarter);
}

TEST_CASE("remainder quotient worked value") {
    Remark26Point r = remark26_ratio(2, 1.0, 2.0, 2.0, 0.5);
    CHECK(r.closed_form == doctest::Approx(0.75));
    CHECK(r.numeric.value == doctest::Approx(0.75).epsilon(1e-8));
}

TEST_CASE("strip quotient closed form agrees with the tensor integrals") {
    // dual route: the reduced closed form against the slab quadrature path
    int n = 3;
    double s = 1.7, alpha = 0.5, eps = 1e-3, eta = 0.5;
    TensorProfile tp = strip_tensor(eps, eta, 1.0, n);
    double closed = strip_qtilde(n, s, alpha, eps, eta, tp.K1, tp.M1);
    Estimate grad = slab_grad_integral(tp, Weight{1.0 - s, 0.0, 1.0});
    Estimate val = slab_value_integral(tp, Weight{-s, 0.0, 1.0});
    Estimate den = slab_grad_integral(tp, Weight{-alpha, 0.0, 1.0});
    double numeric = (grad.value - (s - 1.0) * val.value) / den.value;
    CHECK(numeric == doctest::Approx(closed).epsilon(1e-10));
}
