// Compares the serial reference sweep kernel against the OpenMP kernel on the
// same workload; both produce identical reports under a fixed seed.

#include <benchmark/benchmark.h>

#include "cgmult/oracle.hpp"

namespace {

cgm::OracleConfig bench_config() {
  cgm::OracleConfig cfg;
  cfg.samples = 40;
  cfg.seed = 987654321;
  return cfg;
}

void run_sweep(benchmark::State& state, bool parallel) {
  cgm::GroupPair pair(static_cast<int>(state.range(0)));
  cgm::HalfInt max(state.range(1));
  const auto classes = {cgm::SpinClass::Integer, cgm::SpinClass::Half};
  const auto cfg = bench_config();
  for (auto _ : state) {
    auto report = cgm::check_theorems(pair, max, classes, cfg, parallel);
    benchmark::DoNotOptimize(report);
    if (report.has_violations()) state.SkipWithError("unexpected violation");
  }
  state.counters["cases"] = 0;
  {
    auto report = cgm::check_theorems(pair, max, classes, cfg, parallel);
    state.counters["cases"] = static_cast<double>(report.cases.size());
  }
}

void BM_sweep_serial(benchmark::State& state) { run_sweep(state, false); }
void BM_sweep_parallel(benchmark::State& state) { run_sweep(state, true); }

}  // namespace

BENCHMARK(BM_sweep_serial)
    ->Args({5, 4})
    ->Args({6, 4})
    ->Args({5, 6})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)
    ->Args({5, 4})
    ->Args({6, 4})
    ->Args({5, 6})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
