#include <benchmark/benchmark.h>

#include <dforge/tree.hpp>

using namespace dforge;

namespace {

// A random unit-edge tree on n vertices by attaching each vertex to an
// earlier one; its leaves are the labels.
DistanceMatrix leaf_metric(std::size_t n, Rng& rng) {
  Tree t;
  t.add_vertex();
  for (std::size_t v = 1; v < n; ++v) t.add_edge(t.add_vertex(), std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (t.adj[v].size() <= 1) leaves.push_back(v);
  DistanceMatrix D;
  for (std::size_t a : leaves) {
    const auto dist = tree_distances(t, a);
    D.emplace_back();
    for (std::size_t b : leaves) D.back().push_back(dist[b]);
  }
  return D;
}

void BM_RealizeMetric(benchmark::State& state) {
  Rng rng(3);
  const DistanceMatrix D = leaf_metric(std::size_t(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(realize_metric(D));
}
BENCHMARK(BM_RealizeMetric)->RangeMultiplier(4)->Range(16, 256);

void BM_TreeCenter(benchmark::State& state) {
  Rng rng(4);
  const SubTree st = realize_metric(leaf_metric(std::size_t(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(tree_center(st));
}
BENCHMARK(BM_TreeCenter)->RangeMultiplier(4)->Range(16, 256);

}  // namespace
