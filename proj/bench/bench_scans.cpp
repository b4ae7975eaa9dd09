#include "torgit/hilbert_mumford.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace torgit;

namespace {

// rank 3 on A^12, entries in [-3, 3], fixed seed
TorusAction fixture_action() {
    std::mt19937 rng(20261019);
    std::uniform_int_distribution<long> entry(-3, 3);
    IntMatrix w(3, 12);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 12; ++j) w(i, j) = entry(rng);
    return TorusAction(w);
}

ScanOptions policy_from(const benchmark::State& state) {
    ScanOptions opts;
    opts.policy = state.range(0) == 0 ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
    return opts;
}

void BM_SemistableSupports(benchmark::State& state) {
    const TorusAction a = fixture_action();
    const Character chi{1, -1, 2};
    const ScanOptions opts = policy_from(state);
    for (auto _ : state) benchmark::DoNotOptimize(semistable_supports(a, chi, opts));
}

void BM_MinimalHmValues(benchmark::State& state) {
    const TorusAction a = fixture_action();
    const Character chi{1, -1, 2};
    const ScanOptions opts = policy_from(state);
    for (auto _ : state) benchmark::DoNotOptimize(minimal_hm_values(a, chi, opts));
}

void BM_CombineLinearizations(benchmark::State& state) {
    const TorusAction a = fixture_action();
    const Character chi_l{1, -1, 2}, chi_m{0, 1, 0};
    const ScanOptions opts = policy_from(state);
    for (auto _ : state) benchmark::DoNotOptimize(combine_linearizations(a, chi_l, chi_m, opts));
}

}  // namespace

// Arg 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_SemistableSupports)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MinimalHmValues)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CombineLinearizations)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
