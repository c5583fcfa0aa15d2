#include <benchmark/benchmark.h>

#include "hardylab/functionals.hpp"
#include "hardylab/registry.hpp"
#include "hardylab/sharpness.hpp"

using namespace hardylab;

static void BM_SingularQuadrature(benchmark::State& state) {
    // endpoint exponent approaching -1: the worst case for the substitution path
    double eps = 1.0 / state.range(0);
    for (auto _ : state) {
        auto rest = [](double) { return 1.0; };
        Estimate e = integrate_power_log_zero(eps - 1.0, 0.0, 1.0, rest, 1.0);
        benchmark::DoNotOptimize(e.value);
    }
}
BENCHMARK(BM_SingularQuadrature)->Arg(2)->Arg(10)->Arg(100);

static void BM_WeightedIntegralBall(benchmark::State& state) {
    Domain ball = Domain::ball(3, 1.0);
    Profile u = power_family(3.0, 2.0, 0.1);
    FunctionalSpec spec{FunctionalKind::GradWeighted, 2.0, {-1.0, 0.0, 1.0}};
    for (auto _ : state) {
        Estimate e = weighted_integral(u, ball, spec);
        benchmark::DoNotOptimize(e.value);
    }
}
BENCHMARK(BM_WeightedIntegralBall);

static void BM_MarginL1BallSeries(benchmark::State& state) {
    const InequalityRecord& rec = require_record("L1-BALL-SERIES");
    MarginCase c = rec.defaults.front();
    for (auto _ : state) {
        MarginInputs in = build_case_inputs(rec, c);
        MarginResult r = evaluate_margin(rec, in);
        benchmark::DoNotOptimize(r.margin);
    }
}
BENCHMARK(BM_MarginL1BallSeries);

static void BM_SixpieceClosedForms(benchmark::State& state) {
    for (auto _ : state) {
        SixpieceForms f = sixpiece_closed_forms(2, 4.0, 1e-4);
        benchmark::DoNotOptimize(f.total());
    }
}
BENCHMARK(BM_SixpieceClosedForms);

BENCHMARK_MAIN();
