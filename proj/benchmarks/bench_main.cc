#include <numbers>

#include "benchmark/benchmark.h"
#include "driver/driver.h"
#include "uncertainty/bounds.h"
#include "uncertainty/expsim.h"
#include "uncertainty/spinhalf.h"

using namespace uncertainty;

static void BM_Eigendecompose(benchmark::State &state) {
  const auto m = random_hermitian(Seed{42}, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigendecompose(m));
  }
}
BENCHMARK(BM_Eigendecompose)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_BoundReportPauli(benchmark::State &state) {
  const auto obs = pauli_triple();
  const PureState psi(bloch_state(std::numbers::pi / 4, 0.3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound_report(obs, psi));
  }
}
BENCHMARK(BM_BoundReportPauli);

static void BM_BoundReportRandom(benchmark::State &state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::vector<Observable> obs;
  for (std::uint64_t i = 0; i < 4; ++i) {
    obs.emplace_back(random_hermitian(Seed{i}, dim));
  }
  const PureState psi(random_pure_state(Seed{99}, dim));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound_report(obs, psi));
  }
}
BENCHMARK(BM_BoundReportRandom)->Arg(2)->Arg(6);

static void BM_EmpiricalBoundReport(benchmark::State &state) {
  const auto obs = pauli_triple();
  const PureState psi(bloch_state(1.0, 0.5));
  const SimConfig cfg{.shots = 2800, .seed = Seed{1}, .bootstrap_resamples = static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(empirical_bound_report(obs, psi, cfg));
  }
}
BENCHMARK(BM_EmpiricalBoundReport)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_ScanFullGrid(benchmark::State &state) {
  driver::ScanConfig cfg;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(driver::scan(cfg));
  }
}
BENCHMARK(BM_ScanFullGrid)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
