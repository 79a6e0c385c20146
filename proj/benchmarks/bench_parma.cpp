#include <benchmark/benchmark.h>

#include <parma/compress.hpp>
#include <parma/estimation.hpp>
#include <parma/simulate.hpp>
#include <parma/wavelet.hpp>

using namespace parma;

namespace {

const PeriodicSeries& benchmark_series() {
    static const PeriodicSeries y = simulate(SimConfig{benchmark_parma11_model(), 500, 10, 1, 1.0});
    return y;
}

}  // namespace

static void BM_Innovations(benchmark::State& state) {
    const auto gamma = SeasonalAutocovariance::estimate(benchmark_series(), std::size_t(state.range(0)) + 1,
                                                        SeasonalAutocovariance::Centering::None);
    for (auto _ : state) {
        benchmark::DoNotOptimize(innovations(gamma, std::size_t(state.range(0))));
    }
}
BENCHMARK(BM_Innovations)->Arg(7)->Arg(20)->Arg(50);

static void BM_FitParma11(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_parma11(benchmark_series()));
    }
}
BENCHMARK(BM_FitParma11);

static void BM_DwtMatrixCached(benchmark::State& state) {
    const auto spec = WaveletSpec::least_asymmetric(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwt_matrix(spec, std::size_t(state.range(0))).data());
    }
}
BENCHMARK(BM_DwtMatrixCached)->Arg(16)->Arg(64);

static void BM_CompressWavelet(benchmark::State& state) {
    const auto fit = fit_parma11(benchmark_series());
    for (auto _ : state) {
        benchmark::DoNotOptimize(compress_model(fit));
    }
}
BENCHMARK(BM_CompressWavelet);

static void BM_Simulate(benchmark::State& state) {
    const auto model = benchmark_parma11_model();
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(SimConfig{model, std::size_t(state.range(0)), 10, 1, 1.0}));
    }
}
BENCHMARK(BM_Simulate)->Arg(500)->Arg(5000);
BENCHMARK_MAIN();
