// Micro-benchmarks for the hot paths: series arithmetic, the transfer-matrix
// DP, and the closed-form and bounded evaluators.

#include <benchmark/benchmark.h>

#include <random>

#include "motzkin/bounded.hpp"
#include "motzkin/kernel.hpp"

using namespace motzkin;

namespace {

Series random_series(std::size_t order, long c0, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-6, 6);
    std::vector<Rational> c(order);
    for (auto& x : c) x = d(rng);
    c[0] = c0;
    return Series(c, order);
}

void bm_series_mul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Series a = random_series(n, 1, 1), b = random_series(n, 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_series_mul)->Arg(16)->Arg(32)->Arg(64);

void bm_series_inv(benchmark::State& state) {
    const Series a = random_series(static_cast<std::size_t>(state.range(0)), 3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(series_inv(a));
}
BENCHMARK(bm_series_inv)->Arg(16)->Arg(32)->Arg(64);

void bm_series_sqrt(benchmark::State& state) {
    const Series a = random_series(static_cast<std::size_t>(state.range(0)), 1, 4);
    for (auto _ : state) benchmark::DoNotOptimize(series_sqrt(a));
}
BENCHMARK(bm_series_sqrt)->Arg(16)->Arg(32)->Arg(64);

void bm_count_paths(benchmark::State& state) {
    const auto a = build_automaton(PatternPair::parse("UD,DU"), std::nullopt);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_paths(a, n, Accept::meanders()));
}
BENCHMARK(bm_count_paths)->Arg(20)->Arg(40)->Arg(80);

void bm_eval_unbounded(benchmark::State& state) {
    const auto& e = catalog_lookup(PatternPair::parse("UU,DD"));
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_unbounded(e, Quantity::S1, n));
}
BENCHMARK(bm_eval_unbounded)->Arg(21)->Arg(41);

void bm_eval_bounded(benchmark::State& state) {
    const auto& e = catalog_lookup(PatternPair::parse("UD,DU"));
    const int K = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_bounded(e, BoundedQuantity::Sigma, K + 1, 17));
}
BENCHMARK(bm_eval_bounded)->Arg(2)->Arg(5)->Arg(8);

void bm_solve_banded(benchmark::State& state) {
    const auto& e = catalog_lookup(PatternPair::parse("UD,DU"));
    const int K = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_banded(e, BoundedQuantity::Sigma, K, 17));
}
BENCHMARK(bm_solve_banded)->Arg(2)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
