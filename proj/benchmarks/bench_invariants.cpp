#include <benchmark/benchmark.h>

#include "vwbm/generators.hpp"
#include "vwbm/invariants.hpp"

using namespace vwbm;

static void BM_TraceDegreesOracle(benchmark::State& state) {
    const CurveParams p(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(trace_degrees_oracle(p));
}
BENCHMARK(BM_TraceDegreesOracle)->Args({2, 7})->Args({6, 10})->Args({9, 15})->Unit(benchmark::kMicrosecond);

static void BM_CoversByContainment(benchmark::State& state) {
    const CurveParams p(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(covers_by_containment(p));
}
BENCHMARK(BM_CoversByContainment)->Args({2, 24})->Args({8, 8})->Args({6, 12})->Unit(benchmark::kMicrosecond);

static void BM_GeneratorEquation(benchmark::State& state) {
    const CurveParams p(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(generator_equation(p));
}
BENCHMARK(BM_GeneratorEquation)->Args({3, 4})->Args({5, 7})->Args({8, 12})->Unit(benchmark::kMicrosecond);

static void BM_Report(benchmark::State& state) {
    const CurveParams p(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(build_report(p));
}
BENCHMARK(BM_Report)->Args({2, 7})->Args({6, 10})->Unit(benchmark::kMillisecond);
