#include <benchmark/benchmark.h>

#include <complex>
#include <numbers>

#include "ohwalk/dynamics.hpp"
#include "ohwalk/expm.hpp"
#include "ohwalk/scheme.hpp"
#include "ohwalk/transfer.hpp"

namespace {

void BM_BuildSpectral(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ohwalk::build_spectral(n, 1.0, 2.0));
}
BENCHMARK(BM_BuildSpectral)->DenseRange(4, 12, 4);

void BM_FieldSpectral(benchmark::State& state) {
  const auto sd = ohwalk::build_spectral(static_cast<int>(state.range(0)), 1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(ohwalk::field_spectral(sd, {0, 0}, std::numbers::pi / 4));
}
BENCHMARK(BM_FieldSpectral)->DenseRange(4, 12, 4);

void BM_ClosedFormField(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sites = ohwalk::all_sites(n);
  for (auto _ : state) {
    for (const auto s : sites) benchmark::DoNotOptimize(ohwalk::amplitude_closed_form(n, 1.0, 2.0, s, 0.7));
  }
}
BENCHMARK(BM_ClosedFormField)->DenseRange(4, 12, 4);

void BM_Expm(benchmark::State& state) {
  const auto h = ohwalk::build_hamiltonian(static_cast<int>(state.range(0)), 1.0, 2.0);
  const Eigen::MatrixXcd generator = std::complex<double>(0.0, -1.7) * h.matrix.cast<std::complex<double>>();
  for (auto _ : state) benchmark::DoNotOptimize(ohwalk::expm(generator));
}
BENCHMARK(BM_Expm)->DenseRange(4, 12, 4);

void BM_ScanTimes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sd = ohwalk::build_spectral(n, 1.0, 2.0);
  const auto edge = ohwalk::bottom_edge(n);
  for (auto _ : state) benchmark::DoNotOptimize(ohwalk::scan_times(sd, {0, 0}, std::numbers::pi, 1000, edge));
}
BENCHMARK(BM_ScanTimes)->Arg(7)->Arg(12);

void BM_VerifyBoseMesner(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ohwalk::verify_bose_mesner(n));
}
BENCHMARK(BM_VerifyBoseMesner)->DenseRange(2, 6, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
