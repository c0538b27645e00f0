#include <benchmark/benchmark.h>

#include "heatbox/images.hpp"
#include "heatbox/special_fn.hpp"
#include "heatbox/spectrum.hpp"
#include "heatbox/trace.hpp"

using namespace heatbox;

static void BM_theta(benchmark::State& state) {
    const double x = state.range(0) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(theta(x));
}
BENCHMARK(BM_theta)->Arg(10)->Arg(100)->Arg(1000);

static void BM_trace_1d_direct(benchmark::State& state) {
    const double t = 1.0 / double(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(trace_1d_direct(1.0, 0.75, t));
}
BENCHMARK(BM_trace_1d_direct)->Arg(10)->Arg(1000)->Arg(100000);

static void BM_free_density_origin(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(free_density(0.75, 0.1, 0.0));
}
BENCHMARK(BM_free_density_origin);

static void BM_free_density_oscillatory(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(free_density(0.75, 0.01, 5.0));
}
BENCHMARK(BM_free_density_oscillatory);

static void BM_image_trace(benchmark::State& state) {
    const double t = 1.0 / double(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(image_trace(1.0, 0.75, t).value);
}
BENCHMARK(BM_image_trace)->Arg(10)->Arg(100);

static void BM_counting_function(benchmark::State& state) {
    const SpectralModel model(HyperBox({1.0, 1.0}), 0.5);
    const double e = double(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(counting_function(model, e));
}
BENCHMARK(BM_counting_function)->Arg(100)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
