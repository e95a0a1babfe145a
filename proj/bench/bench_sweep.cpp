// Serial reference vs OpenMP sweep over the default 800-point grid, plus the
// single-box kernel in the slow (small theta) and fast (large theta) regimes.

#include <benchmark/benchmark.h>

#include "fqhe/sweep.hpp"
#include "fqhe/thermo.hpp"

namespace {

void BM_SweepSerial(benchmark::State& state) {
  const fqhe::SweepConfig cfg = fqhe::default_sweep_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fqhe::run_sweep_serial(cfg));
  }
  state.SetItemsProcessed(state.iterations() * 800);
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const fqhe::SweepConfig cfg = fqhe::default_sweep_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fqhe::run_sweep_parallel(cfg));
  }
  state.SetItemsProcessed(state.iterations() * 800);
}
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CanonicalState(benchmark::State& state) {
  fqhe::WellSpec spec;
  spec.alpha = 2.0;
  spec.half_width = static_cast<double>(state.range(0)) * 1e-9;
  const auto ctx = fqhe::ThermalContext::from_temperature(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fqhe::canonical_state(spec, ctx));
  }
}
BENCHMARK(BM_CanonicalState)->Arg(1)->Arg(20)->Arg(200)->Arg(2000);

} // namespace

BENCHMARK_MAIN();
