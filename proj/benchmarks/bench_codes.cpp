#include <benchmark/benchmark.h>

#include "qvt/codes.hpp"
#include "qvt/words.hpp"

static void BM_DMDistribution(benchmark::State& state) {
  const int total = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qvt::dm_distribution_constant_weight(total / 2, total - total / 2));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DMDistribution)->DenseRange(8, 16, 4)->Complexity();

static void BM_CardinalityClosedForm(benchmark::State& state) {
  const int gamma = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qvt::cardinality_closed_form({gamma, gamma, 1}));
  }
}
BENCHMARK(BM_CardinalityClosedForm)->RangeMultiplier(2)->Range(4, 16);

static void BM_SphereCardinality(benchmark::State& state) {
  const int gamma = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qvt::sphere_cardinality({gamma, gamma, 0}));
  }
}
BENCHMARK(BM_SphereCardinality)->DenseRange(4, 8, 2);

static void BM_DecodeRoundTrip(benchmark::State& state) {
  const int gamma = static_cast<int>(state.range(0));
  const qvt::CodeSpec spec{gamma, gamma, 0};
  // One representative codeword and deletion position per iteration.
  qvt::Word codeword;
  qvt::for_each_codeword(spec, [&](const qvt::Word& w) {
    if (codeword.length() == 0) codeword = w;
  });
  const qvt::Word received = codeword.with_deleted(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qvt::decode_single_deletion(received, spec));
  }
}
BENCHMARK(BM_DecodeRoundTrip)->DenseRange(2, 6, 2);
