#include <benchmark/benchmark.h>

#include "vwbm/rowspan.hpp"

using namespace vwbm;

static void BM_RowSpan(benchmark::State& state) {
    const CurveParams p(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(row_span(p));
    state.counters["span"] = static_cast<double>(row_span(p).size());
}
BENCHMARK(BM_RowSpan)->Args({2, 7})->Args({6, 10})->Args({12, 18})->Args({20, 30})->Unit(benchmark::kMicrosecond);

static void BM_Summands(benchmark::State& state) {
    const CurveParams p(state.range(0), state.range(1));
    const auto span = row_span(p);
    for (auto _ : state) benchmark::DoNotOptimize(summands(p, span));
}
BENCHMARK(BM_Summands)->Args({2, 7})->Args({6, 10})->Args({12, 18})->Args({20, 30})->Unit(benchmark::kMicrosecond);
