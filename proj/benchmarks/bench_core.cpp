#include <benchmark/benchmark.h>

#include "nlho/complexifier.hpp"
#include "nlho/eigenfunctions.hpp"
#include "nlho/grid.hpp"
#include "nlho/matrix_exp.hpp"

namespace {

nlho::OscillatorParams natural() { return {}; }

void BM_OracleSpectrum(benchmark::State& state) {
  const auto p = natural();
  const auto grid = nlho::Grid::make(80.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nlho::oracle_spectrum(p, grid, 10, false));
}
BENCHMARK(BM_OracleSpectrum)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_OracleVectors(benchmark::State& state) {
  const auto p = natural();
  const auto grid = nlho::Grid::make(80.0, 4000);
  for (auto _ : state) benchmark::DoNotOptimize(nlho::oracle_spectrum(p, grid, 6, true));
}
BENCHMARK(BM_OracleVectors)->Unit(benchmark::kMillisecond);

void BM_QuantumZ(benchmark::State& state) {
  nlho::OscillatorParams p;
  p.lambda = 0.05;
  const auto grid = nlho::Grid::make(25.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nlho::quantum_Z(p, grid));
}
BENCHMARK(BM_QuantumZ)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_EigenfunctionBuild(benchmark::State& state) {
  const auto p = natural();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nlho::eigenfunction(n, p));
}
BENCHMARK(BM_EigenfunctionBuild)->Arg(0)->Arg(5)->Arg(9)->Unit(benchmark::kMicrosecond);

void BM_EigenfunctionEvaluate(benchmark::State& state) {
  const auto phi = nlho::eigenfunction(static_cast<int>(state.range(0)), natural());
  double X = -20.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi.evaluate(X));
    X = X > 20.0 ? -20.0 : X + 0.013;
  }
}
BENCHMARK(BM_EigenfunctionEvaluate)->Arg(0)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
