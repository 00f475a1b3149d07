#include <benchmark/benchmark.h>

#include "gralg/graph.hpp"
#include "gralg/hilbert.hpp"
#include "gralg/quadratic.hpp"
#include "gralg/sufficiency.hpp"
#include "gralg/vieta.hpp"

namespace {

using namespace gralg;

void hilbert_method(benchmark::State& state, HilbertMethod method) {
  const auto g = build_graph(GraphSpec::boolean(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(g, 8, method));
}

void BM_HilbertZeta(benchmark::State& state) { hilbert_method(state, HilbertMethod::zeta); }
void BM_HilbertChains(benchmark::State& state) { hilbert_method(state, HilbertMethod::chains); }
void BM_HilbertBasis(benchmark::State& state) { hilbert_method(state, HilbertMethod::basis); }

BENCHMARK(BM_HilbertZeta)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HilbertChains)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HilbertBasis)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_SubspaceZeta(benchmark::State& state) {
  const auto g = build_graph(GraphSpec::subspace(4, 2));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(g, 6, HilbertMethod::zeta));
}
BENCHMARK(BM_SubspaceZeta)->Unit(benchmark::kMillisecond);

void BM_GradedDim(benchmark::State& state) {
  const auto g = build_graph(GraphSpec::boolean(3));
  const auto rel = relations_quadratic(g, RelationMode::uniform_shortcut);
  const auto k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graded_dim(rel, k, AlgebraSide::algebra));
}
BENCHMARK(BM_GradedDim)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_DualGradedDim(benchmark::State& state) {
  const auto g = build_graph(GraphSpec::boolean(3));
  const auto rel = relations_quadratic(g, RelationMode::uniform_shortcut);
  for (auto _ : state) benchmark::DoNotOptimize(graded_dim(rel, 4, AlgebraSide::dual));
}
BENCHMARK(BM_DualGradedDim)->Unit(benchmark::kMillisecond);

void BM_RelationsPathPairs(benchmark::State& state) {
  const auto g = build_graph(GraphSpec::boolean(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(relations_quadratic(g, RelationMode::path_pairs));
}
BENCHMARK(BM_RelationsPathPairs)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Closure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = build_graph(GraphSpec::boolean(n));
  EdgeSet bottom;
  for (int k = 1; k <= n; ++k) bottom.insert(edge_for_pseudoroot(g, n, {{}, k}));
  for (auto _ : state) benchmark::DoNotOptimize(du_closure(g, bottom));
}
BENCHMARK(BM_Closure)->DenseRange(3, 7);

void BM_ExhaustiveTable(benchmark::State& state) {
  const auto g = build_graph(GraphSpec::boolean(3));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_table(g, 3));
}
BENCHMARK(BM_ExhaustiveTable)->Unit(benchmark::kMillisecond);

void BM_VietaOrderings(benchmark::State& state) {
  const auto sys = random_generic_roots(3, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(factorization_from_ordering(sys, {2, 3, 1}));
}
BENCHMARK(BM_VietaOrderings)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
