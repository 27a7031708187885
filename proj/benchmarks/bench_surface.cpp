#include <benchmark/benchmark.h>

#include "vwbm/square_tiled.hpp"

using namespace vwbm;

static void BM_BuildSurface(benchmark::State& state) {
    const CurveParams p(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(CombSurface(p));
}
BENCHMARK(BM_BuildSurface)->Args({4, 4})->Args({6, 10})->Args({12, 12})->Unit(benchmark::kMicrosecond);

static void BM_LiftClasses(benchmark::State& state) {
    const CombSurface surface(CurveParams(state.range(0), state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(count_lift_classes(surface));
    state.counters["squares"] = static_cast<double>(surface.square_count());
}
BENCHMARK(BM_LiftClasses)->Args({4, 4})->Args({6, 10})->Args({12, 12})->Unit(benchmark::kMillisecond);

static void BM_SurfaceGenus(benchmark::State& state) {
    const CombSurface surface(CurveParams(state.range(0), state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(surface_genus(surface));
}
BENCHMARK(BM_SurfaceGenus)->Args({4, 4})->Args({6, 10})->Args({12, 12})->Unit(benchmark::kMicrosecond);
