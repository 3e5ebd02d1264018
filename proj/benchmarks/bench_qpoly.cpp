#include <benchmark/benchmark.h>

#include "qvt/qpoly.hpp"

static void BM_QBinomial(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qvt::q_binomial(i, i / 2));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QBinomial)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_LatticePathOracle(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qvt::lattice_path_weight_distribution(i, i / 2));
  }
}
BENCHMARK(BM_LatticePathOracle)->DenseRange(8, 16, 4);

static void BM_ReduceMod(benchmark::State& state) {
  const qvt::QPoly qb = qvt::q_binomial(32, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qvt::reduce_mod(qb, 32));
  }
}
BENCHMARK(BM_ReduceMod);

static void BM_RootEvaluation(benchmark::State& state) {
  const qvt::QPoly qb = qvt::q_binomial(32, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qvt::eval_at_root_of_unity(qb, 32, 5));
  }
}
BENCHMARK(BM_RootEvaluation);
