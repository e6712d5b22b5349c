#include "kscope/kaleidoscope.hpp"
#include "kscope/modexp.hpp"
#include "kscope/photon.hpp"
#include "kscope/qalgebra.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace kscope;

static void BM_ModExpSeries(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double x = 10.0;
    for (auto _ : state) {
        for (int s = 0; s < n; ++s) benchmark::DoNotOptimize(mod_exp_series(n, s, x));
    }
}
BENCHMARK(BM_ModExpSeries)->Arg(2)->Arg(4)->Arg(12);

static void BM_ModExpSuperposition(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double x = 10.0;
    for (auto _ : state) {
        for (int s = 0; s < n; ++s) benchmark::DoNotOptimize(mod_exp_superposition(n, s, x));
    }
}
BENCHMARK(BM_ModExpSuperposition)->Arg(2)->Arg(4)->Arg(12);

static void BM_CoherentState(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const cx alpha{1.5, 0.5};
    for (auto _ : state) benchmark::DoNotOptimize(coherent_state(alpha, dim));
}
BENCHMARK(BM_CoherentState)->Arg(32)->Arg(128);

static void BM_BasisBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(make_basis(n, cx{1.5, 0.0}));
}
BENCHMARK(BM_BasisBuild)->Arg(2)->Arg(4)->Arg(8);

static void BM_GramMatrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const KaleidoscopeBasis basis = make_basis(n, cx{1.5, 0.0});
    for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(basis));
}
BENCHMARK(BM_GramMatrix)->Arg(4)->Arg(8);

static void BM_PhotonCurve(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(photon_curve(4, 3, 6.0, 120));
}
BENCHMARK(BM_PhotonCurve);

static void BM_AlgebraResiduals(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(algebra_residuals(n));
}
BENCHMARK(BM_AlgebraResiduals)->Arg(4)->Arg(12);

BENCHMARK_MAIN();
