#include <benchmark/benchmark.h>

#include "slackcomm/catalog.hpp"
#include "slackcomm/convert.hpp"
#include "slackcomm/extension.hpp"
#include "slackcomm/reductions.hpp"

using namespace slackcomm;

static void BM_SpanningTreeSlack(benchmark::State& state) {
  const Graph g = Graph::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(slack_matrix(PolytopeFamily::spanning_tree, g, false));
  }
}
BENCHMARK(BM_SpanningTreeSlack)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_PerfectMatchingSlack(benchmark::State& state) {
  const Graph g = Graph::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(slack_matrix(PolytopeFamily::perfect_matching, g, false));
  }
}
BENCHMARK(BM_PerfectMatchingSlack)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_SpanningTreeExpectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto t = spanning_tree_protocol(n);
  const auto s = slack_matrix(PolytopeFamily::spanning_tree, Graph::complete(n), false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(computes_in_expectation(t, s));
  }
}
BENCHMARK(BM_SpanningTreeExpectation)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_ProtocolToFactorization(benchmark::State& state) {
  const auto t = spanning_tree_protocol(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(protocol_to_factorization(t));
  }
}
BENCHMARK(BM_ProtocolToFactorization)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_FactorizationToProtocol(benchmark::State& state) {
  const auto f = protocol_to_factorization(spanning_tree_protocol(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorization_to_protocol(f));
  }
}
BENCHMARK(BM_FactorizationToProtocol)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_GreedyMatchingCover(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_matching_cover(n));
  }
}
BENCHMARK(BM_GreedyMatchingCover)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_ExtensionSpanningTreeK4(benchmark::State& state) {
  const Graph g = Graph::complete(4);
  const auto p = spanning_tree_polytope(g);
  const auto full = slack_matrix(PolytopeFamily::spanning_tree, g, true);
  const auto nonneg = split_nonnegativity(full).second;
  const auto f = protocol_to_factorization(combine_row_partition(
      spanning_tree_protocol(4), nonnegativity_rows_protocol(nonneg.rows(), nonneg)));
  for (auto _ : state) {
    const auto q = build_extension(p, f);
    benchmark::DoNotOptimize(verify_projection(q, p, f));
  }
}
BENCHMARK(BM_ExtensionSpanningTreeK4)->Unit(benchmark::kMillisecond);

static void BM_VerifyReduction(benchmark::State& state) {
  const auto target = state.range(0) == 0 ? ReductionTarget::pm : ReductionTarget::st;
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_reduction(target, n));
  }
}
BENCHMARK(BM_VerifyReduction)->Args({0, 4})->Args({1, 6})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
