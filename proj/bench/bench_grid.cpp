// Serial reference against the OpenMP grid evaluator on the same keys.

#include "tbcalc/batch.hpp"

#include <benchmark/benchmark.h>

#include <numeric>

namespace {

using namespace tbcalc;

std::vector<GridKey> grid_keys(std::int64_t m_max, std::int64_t n_max)
{
    std::vector<GridKey> keys;
    for (std::int64_t m = 2; m <= m_max; ++m) {
        for (std::int64_t n = 2; n <= n_max; ++n) {
            if (std::gcd(m, n) == 1) {
                keys.push_back({m, n, Sign::plus});
                keys.push_back({m, n, Sign::minus});
            }
        }
    }
    return keys;
}

void BM_GridSerial(benchmark::State& state)
{
    const auto keys = grid_keys(10, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_grid_serial(keys));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(keys.size()));
}

void BM_GridParallel(benchmark::State& state)
{
    const auto keys = grid_keys(10, state.range(0));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_grid_parallel(keys, threads));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(keys.size()));
    state.counters["threads"] = threads;
}

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridParallel)
    ->ArgsProduct({{60, 120}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
