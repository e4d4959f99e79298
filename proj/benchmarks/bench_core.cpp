#include <benchmark/benchmark.h>

#include "dualgraph/canonical.hpp"
#include "dualgraph/enumerate.hpp"
#include "dualgraph/fundamental.hpp"
#include "dualgraph/graph.hpp"
#include "dualgraph/oracle.hpp"
#include "dualgraph/yau.hpp"

namespace {

using namespace dualgraph;

WeightedDualGraph e8() {
  std::vector<VertexData> vs(8, VertexData{-2, 0, 0});
  std::vector<EdgeData> es;
  for (int i = 0; i + 2 < 8; ++i) es.push_back({i, i + 1, 1});
  es.push_back({2, 7, 1});
  return WeightedDualGraph(vs, es);
}

WeightedDualGraph case5_double() {
  return WeightedDualGraph(
      {{-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-2, 0, 0}, {-6, 0, 0}},
      {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {4, 5, 2}});
}

void BM_FundamentalCycleE8(benchmark::State& state) {
  const auto g = e8();
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_cycle(g).cycle);
}
BENCHMARK(BM_FundamentalCycleE8);

void BM_NegativeDefiniteCertificate(benchmark::State& state) {
  const auto g = e8();
  for (auto _ : state) benchmark::DoNotOptimize(check_negative_definite(g));
}
BENCHMARK(BM_NegativeDefiniteCertificate);

void BM_CanonicalCycle(benchmark::State& state) {
  const auto g = case5_double();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_cycle(g));
}
BENCHMARK(BM_CanonicalCycle);

void BM_YauSequence(benchmark::State& state) {
  const auto g = case5_double();
  for (auto _ : state) benchmark::DoNotOptimize(yau_sequence(g));
}
BENCHMARK(BM_YauSequence);

void BM_PaMax(benchmark::State& state) {
  const auto g = case5_double();
  for (auto _ : state) benchmark::DoNotOptimize(pa_max(g));
}
BENCHMARK(BM_PaMax);

void BM_EnumerateSpecial(benchmark::State& state) {
  EnumerationOptions options;
  options.max_vertices = static_cast<int>(state.range(0));
  options.special_weights = {-2, -3};
  options.special_genera = {0, 1};
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_enumerated_graph(options, [&](const WeightedDualGraph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateSpecial)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
