#include <random>

#include <benchmark/benchmark.h>

#include "spinwit/bounds.hpp"
#include "spinwit/criteria.hpp"
#include "spinwit/states.hpp"

namespace {

using namespace spinwit;

void BM_TraceNormHermitian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sys = CoupledSpinSystem::get(n);
  const ComplexMatrix rho = random_density(*sys, sys->dim(), 1).matrix();
  const ComplexMatrix t2 = lift_on_2(LocalMap::Transpose, rho, *sys);
  for (auto _ : state) benchmark::DoNotOptimize(trace_norm(t2));
}
BENCHMARK(BM_TraceNormHermitian)->Arg(4)->Arg(6)->Arg(8);

void BM_RealignNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sys = CoupledSpinSystem::get(n);
  const ComplexMatrix rho = random_density(*sys, sys->dim(), 2).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(realign_norm(rho, *sys));
}
BENCHMARK(BM_RealignNorm)->Arg(4)->Arg(6)->Arg(8);

// Uncached construction: projectors dominate.
void BM_BuildSystem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CoupledSpinSystem sys(n);
    benchmark::DoNotOptimize(sys.p0().data());
  }
}
BENCHMARK(BM_BuildSystem)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_MinimizeWitness(benchmark::State& state) {
  const auto sys = CoupledSpinSystem::get(4);
  const ComplexMatrix rho = family_state(*sys, 0.3).matrix();
  const auto [u1, u2] = random_product_unitary(*sys, 9);
  const ComplexMatrix u = kron(u1, u2);
  const ComplexMatrix twisted = u * rho * u.adjoint();
  const WitnessBudget budget{static_cast<int>(state.range(0)), 500, 3};
  for (auto _ : state) benchmark::DoNotOptimize(minimize_witness(twisted, *sys, budget).value);
}
BENCHMARK(BM_MinimizeWitness)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FamilySweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sys = CoupledSpinSystem::get(n);
  for (auto _ : state) {
    for (int k = 0; k <= 100; ++k) {
      benchmark::DoNotOptimize(concurrence_lower_bound(family_state(*sys, k / 100.0), *sys));
    }
  }
}
BENCHMARK(BM_FamilySweep)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
