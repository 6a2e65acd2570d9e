#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tvkit/knowledge_tv.hpp"
#include "tvkit/money_tv.hpp"
#include "tvkit/rate_solver.hpp"
#include "tvkit/weight_profiles.hpp"

using namespace tvkit;

static void BM_PvOfStream(benchmark::State& state) {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> amt(-1000.0, 1000.0);
    std::vector<std::pair<double, double>> pairs;
    for (int i = 0; i < state.range(0); ++i)
        pairs.emplace_back(static_cast<double>(i) / 12.0, amt(gen));
    const auto stream = make_stream(pairs);
    const Rate r = Rate::interest(0.04);
    for (auto _ : state)
        benchmark::DoNotOptimize(money::pv_of_stream(stream, r));
}
BENCHMARK(BM_PvOfStream)->Arg(100)->Arg(1000);

static void BM_Irr(benchmark::State& state) {
    const auto stream =
        make_stream({{0, -100}, {1, 30}, {2, 30}, {3, 30}, {4, 30}});
    const solver::Bracket bracket(-0.9, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(solver::irr(stream, bracket, 1e-12));
}
BENCHMARK(BM_Irr);

static void BM_BetaFunction(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(profiles::beta_function(0.5, 0.5));
}
BENCHMARK(BM_BetaFunction);

static void BM_LimitProbe(benchmark::State& state) {
    const Rate k = Rate::knowledge(0.01);
    for (auto _ : state)
        benchmark::DoNotOptimize(knowledge::limit_probe(1.0, k, 1e6, 10000));
}
BENCHMARK(BM_LimitProbe);

static void BM_NascentDeltaIntegral(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(profiles::integrate(
            [](double t) { return profiles::nascent_delta(1e-2, 0.0, t); },
            -1.0, 1.0, 1e-9));
}
BENCHMARK(BM_NascentDeltaIntegral);

BENCHMARK_MAIN();
