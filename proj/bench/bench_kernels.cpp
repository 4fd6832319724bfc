// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "inerton/analytic.hpp"
#include "inerton/core.hpp"

namespace {

inerton::SimulationConfig bench_config() {
  inerton::SimulationConfig c;
  c.N = 100000;
  return c;
}

void BM_TrajectorySerial(benchmark::State& state) {
  const auto c = bench_config();
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(inerton::analytic::trajectory_series_serial(c, 3, 4, samples));
  }
  state.SetItemsProcessed(state.iterations() * 4 * samples);
}

void BM_TrajectoryParallel(benchmark::State& state) {
  const auto c = bench_config();
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(inerton::analytic::trajectory_series(c, 3, 4, samples));
  }
  state.SetItemsProcessed(state.iterations() * 4 * samples);
}

void BM_EmissionTableSerial(benchmark::State& state) {
  const auto c = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(inerton::emission_table_serial(c));
  state.SetItemsProcessed(state.iterations() * c.N);
}

void BM_EmissionTableParallel(benchmark::State& state) {
  const auto c = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(inerton::emission_table(c));
  state.SetItemsProcessed(state.iterations() * c.N);
}

}  // namespace

BENCHMARK(BM_TrajectorySerial)->Arg(1000)->Arg(100000);
BENCHMARK(BM_TrajectoryParallel)->Arg(1000)->Arg(100000);
BENCHMARK(BM_EmissionTableSerial);
BENCHMARK(BM_EmissionTableParallel);

BENCHMARK_MAIN();
