#include <benchmark/benchmark.h>

#include "mbar/chi_recursion.hpp"
#include "mbar/closed_forms.hpp"
#include "mbar/functional_eq.hpp"
#include "mbar/gk_engine.hpp"
#include "mbar/graph_oracle.hpp"

using namespace mbar;

static void BM_LinearRow(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ChiTable t;
        benchmark::DoNotOptimize(t.chi_tilde(g, 10));
    }
}
BENCHMARK(BM_LinearRow)->Arg(0)->Arg(1)->Arg(2)->Arg(4);

static void BM_QuadraticRecursion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ChiTable t;
        benchmark::DoNotOptimize(t.chi_tilde_quadratic(2, n));
    }
}
BENCHMARK(BM_QuadraticRecursion)->DenseRange(0, 6, 2);

static void BM_GenusOperator(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ChiTable t;
        benchmark::DoNotOptimize(t.chi_tilde_g0(g));
    }
}
BENCHMARK(BM_GenusOperator)->DenseRange(3, 8);

static void BM_FeynmanSum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(feynman_sum(0, n + 3, OracleBudget{5}));
}
BENCHMARK(BM_FeynmanSum)->DenseRange(1, 5);

static void BM_GkVirasoro(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gk_virasoro(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GkVirasoro)->DenseRange(2, 6, 2);

static void BM_GkWick(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gk_wick(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GkWick)->DenseRange(2, 6, 2);

static void BM_ClosedFormB(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(b_k_series(static_cast<int>(state.range(0)), 12));
}
BENCHMARK(BM_ClosedFormB)->DenseRange(2, 10, 4);

static void BM_SolveChi0(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_chi0(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SolveChi0)->Arg(12)->Arg(24);

BENCHMARK_MAIN();
