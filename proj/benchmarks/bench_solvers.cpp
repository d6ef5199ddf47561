#include <benchmark/benchmark.h>

#include "nml/nml.hpp"

namespace {

void BM_SolveExact(benchmark::State& state) {
  const auto kernel = nml::make_kernel(nml::KernelKind::Lorentzian, 1.0, 0.1);
  const double dt = 20.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nml::solve_exact(kernel, {dt, 20.0, false}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveExact)->RangeMultiplier(2)->Range(1 << 10, 1 << 14)->Complexity(benchmark::oNSquared);

void BM_MsTrajectory(benchmark::State& state) {
  const auto kernel = nml::make_kernel(nml::KernelKind::GaussianError, 1.0, 0.1);
  const auto coeffs = nml::derive_ms_coefficients(nml::taylor_coefficients(kernel, 4), 1.0, 0.1);
  const auto order = state.range(0) == 0 ? nml::MsOrder::MS0 : nml::MsOrder::MS1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nml::ms_trajectory(coeffs, kernel.alpha(), order, {kernel.kind(), 1.0, 0.1}, 1e-3, 20.0));
  }
}
BENCHMARK(BM_MsTrajectory)->Arg(0)->Arg(1);

void BM_MasterCoefficients(benchmark::State& state) {
  const auto traj = nml::lorentzian_closed_form_trajectory(1.0, 0.1, 1e-3, 20.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nml::master_coefficients(traj));
  }
}
BENCHMARK(BM_MasterCoefficients);

void BM_TclPopulation(benchmark::State& state) {
  const nml::BaselineSpec spec{nml::BaselineMethod::TCL6, 1.0, 0.1};
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nml::tcl_population(spec, t));
    t = t > 20.0 ? 0.0 : t + 1e-3;
  }
}
BENCHMARK(BM_TclPopulation);

}  // namespace
BENCHMARK_MAIN();
