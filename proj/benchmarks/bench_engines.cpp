#include <benchmark/benchmark.h>

#include "pierik/engines.hpp"
#include "pierik/euler.hpp"
#include "pierik/recursion.hpp"
#include "pierik/ring.hpp"
#include "pierik/tableaux.hpp"

using namespace pierik;

namespace {

const Space og7 = Space::og(7);
const Partition lambda({6, 4, 1});
const Partition nu({7, 6, 3, 1});

void BM_direct_og7(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(direct_coefficient(lambda, 5, nu, og7));
    }
}
BENCHMARK(BM_direct_og7);

void BM_recursive_og7_cold(benchmark::State& state) {
    for (auto _ : state) {
        state.PauseTiming();
        clear_recursion_cache();
        state.ResumeTiming();
        benchmark::DoNotOptimize(recursive_coefficient(lambda, 5, nu, og7));
    }
}
BENCHMARK(BM_recursive_og7_cold);

void BM_recursive_og7_warm(benchmark::State& state) {
    recursive_coefficient(lambda, 5, nu, og7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(recursive_coefficient(lambda, 5, nu, og7));
    }
}
BENCHMARK(BM_recursive_og7_warm);

void BM_tableaux_og7(benchmark::State& state) {
    auto theta = make_skew(lambda, nu, og7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_tableaux(theta, 5, TableauMode::KOG));
    }
}
BENCHMARK(BM_tableaux_og7);

void BM_pieri_multiply_lg5(benchmark::State& state) {
    Space lg5 = Space::lg(5);
    auto v = KVector::basis(lg5, Partition({3, 1}));
    for (auto _ : state) {
        clear_recursion_cache();
        benchmark::DoNotOptimize(pieri_multiply(v, 2, Engine::Recursive));
    }
}
BENCHMARK(BM_pieri_multiply_lg5);

void BM_dual_class_og6(benchmark::State& state) {
    Space og6 = Space::og(6);
    Partition big({6, 5, 3, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(dual_class(big, og6));
    }
}
BENCHMARK(BM_dual_class_og6);

}  // namespace

BENCHMARK_MAIN();
