#include "diskcover/exact_multi.hpp"
#include "diskcover/greedy_neighborhood.hpp"
#include "diskcover/harness/instance.hpp"
#include "diskcover/max_disk.hpp"

#include <benchmark/benchmark.h>

namespace {

using diskcover::harness::generate;

// Args: n, side
void BM_BestDiskSweep(benchmark::State& state) {
  const auto pts = generate(state.range(0), static_cast<double>(state.range(1)), 1).points;
  for (auto _ : state) {
    benchmark::DoNotOptimize(diskcover::best_disk_sweep(pts));
  }
}
BENCHMARK(BM_BestDiskSweep)->Args({500, 100})->Args({1000, 200})->Args({1000, 50})->Unit(benchmark::kMillisecond);

void BM_BestDiskGrid(benchmark::State& state) {
  const auto pts = generate(state.range(0), static_cast<double>(state.range(1)), 1).points;
  diskcover::GridWork work;
  for (auto _ : state) {
    benchmark::DoNotOptimize(diskcover::best_disk_grid(pts, &work));
  }
  state.counters["squared_work"] = static_cast<double>(work.squared_work);
}
BENCHMARK(BM_BestDiskGrid)->Args({500, 100})->Args({1000, 200})->Args({1000, 50})->Unit(benchmark::kMillisecond);

void BM_ExhaustivePairs(benchmark::State& state) {
  const auto pts = generate(state.range(0), static_cast<double>(state.range(1)), 1).points;
  std::size_t pairs = 0;
  for (auto _ : state) {
    const auto r = diskcover::most_points(pts, 2);
    pairs = r.stats.combos_evaluated;
    benchmark::DoNotOptimize(r);
  }
  state.counters["pairs"] = static_cast<double>(pairs);
}
BENCHMARK(BM_ExhaustivePairs)->Args({500, 100})->Args({1000, 200})->Unit(benchmark::kMillisecond);

void BM_NeighborhoodSolve(benchmark::State& state) {
  const auto pts = generate(state.range(0), static_cast<double>(state.range(1)), 1).points;
  std::size_t pairs = 0;
  for (auto _ : state) {
    const auto sol = diskcover::solve(pts, 2);
    pairs = sol.total_combos;
    benchmark::DoNotOptimize(sol);
  }
  state.counters["pairs"] = static_cast<double>(pairs);
}
BENCHMARK(BM_NeighborhoodSolve)->Args({500, 100})->Args({1000, 200})->Args({1000, 50})->Unit(benchmark::kMillisecond);

void BM_NeighborhoodSolveThreeDisks(benchmark::State& state) {
  const auto pts = generate(state.range(0), static_cast<double>(state.range(1)), 1).points;
  for (auto _ : state) {
    benchmark::DoNotOptimize(diskcover::solve(pts, 3));
  }
}
BENCHMARK(BM_NeighborhoodSolveThreeDisks)->Args({500, 100})->Args({1000, 200})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
