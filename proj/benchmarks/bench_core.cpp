#include <benchmark/benchmark.h>

#include <vector>

#include "salpeter/bounds.hpp"
#include "salpeter/spectra.hpp"

using namespace salpeter;

namespace {

void BM_KineticAssembly(benchmark::State& state) {
  const TrialBasis basis(0, 1.0, 1.0, static_cast<int>(state.range(0)));
  const MassConfig masses(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(kinetic_matrix(basis, masses).entries(0, 0));
}
BENCHMARK(BM_KineticAssembly)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_PotentialAssembly(benchmark::State& state) {
  const TrialBasis basis(0, 1.0, 1.0, static_cast<int>(state.range(0)));
  const PotentialSpec spec = PotentialSpec::hellmann(1.0, -1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(potential_matrix(basis, spec).entries(0, 0));
}
BENCHMARK(BM_PotentialAssembly)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_SolveSector(benchmark::State& state) {
  const TrialBasis basis(0, 1.0, 1.0, 32);
  const MassConfig masses(1.0);
  const PotentialSpec spec = PotentialSpec::hellmann(1.0, -2.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve(basis, masses, spec, 6).binding[0]);
}
BENCHMARK(BM_SolveSector)->Unit(benchmark::kMillisecond);

void BM_MomentumEvalAll(benchmark::State& state) {
  const TrialBasis basis(2, 1.0, 1.0, 32);
  std::vector<double> buf(32);
  double p = 0.0;
  for (auto _ : state) {
    p += 0.01;
    momentum_eval_all(basis, p, buf);
    benchmark::DoNotOptimize(buf[31]);
  }
}
BENCHMARK(BM_MomentumEvalAll);

void BM_CountBound(benchmark::State& state) {
  const PotentialSpec well = PotentialSpec::exponential_well(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(count_bound(well, 1.0).n_bound);
}
BENCHMARK(BM_CountBound)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
