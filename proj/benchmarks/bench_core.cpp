#include <benchmark/benchmark.h>

#include <vector>

#include "shodlab/census.hpp"
#include "shodlab/classify.hpp"
#include "shodlab/permutation.hpp"

using namespace shodlab;

static void BM_EnumeratePaths(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::uint64_t count = 0;
        for_each_path(m, [&](const DyckPath&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePaths)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_ClassifyHomological(benchmark::State& state) {
    const auto paths = enumerate_paths(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const DyckPath& p : paths) benchmark::DoNotOptimize(classify_homological(p));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(paths.size()));
}
BENCHMARK(BM_ClassifyHomological)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_ClassifyGeometric(benchmark::State& state) {
    const auto paths = enumerate_paths(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const DyckPath& p : paths) benchmark::DoNotOptimize(classify_geometric(p));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(paths.size()));
}
BENCHMARK(BM_ClassifyGeometric)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_ClassCounts(benchmark::State& state) {
    const CensusOptions options{static_cast<int>(state.range(1)), kDefaultMaxSemilength};
    for (auto _ : state) benchmark::DoNotOptimize(class_counts(static_cast<int>(state.range(0)), options));
}
BENCHMARK(BM_ClassCounts)->Args({10, 1})->Args({12, 1})->Args({12, 4})->Unit(benchmark::kMillisecond);

static void BM_ContainsPattern(benchmark::State& state) {
    const std::vector<Permutation> shod_patterns{Permutation({4, 3, 2, 1}), Permutation({4, 2, 3, 1})};
    std::vector<Permutation> perms;
    for_each_path(static_cast<int>(state.range(0)), [&](const DyckPath& p) { perms.push_back(phi_inverse(p)); });
    for (auto _ : state)
        for (const Permutation& pi : perms) benchmark::DoNotOptimize(avoids_all(pi, shod_patterns));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(perms.size()));
}
BENCHMARK(BM_ContainsPattern)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_PhiRoundtrip(benchmark::State& state) {
    const auto paths = enumerate_paths(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const DyckPath& p : paths) benchmark::DoNotOptimize(phi(phi_inverse(p)));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(paths.size()));
}
BENCHMARK(BM_PhiRoundtrip)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_VerifyTheorems(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_theorems(static_cast<int>(state.range(0))).verified());
}
BENCHMARK(BM_VerifyTheorems)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
