#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "netdiff/cluster.hpp"
#include "netdiff/compare.hpp"
#include "netdiff/metrics.hpp"
#include "netdiff/network.hpp"

namespace {

// Erdos-Renyi graph with integer weights 1..9 and an expected degree of 8.
netdiff::WeightedNetwork random_graph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(8.0 / static_cast<double>(n));
  std::uniform_int_distribution<int> weight(1, 9);
  std::vector<netdiff::NodeLabel> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back("n" + std::to_string(i));
  std::vector<double> adjacency(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) adjacency[i * n + j] = adjacency[j * n + i] = weight(rng);
    }
  }
  return netdiff::WeightedNetwork::from_matrix(std::move(labels), std::move(adjacency));
}

void BM_Betweenness(benchmark::State& state) {
  const auto net = random_graph(static_cast<std::size_t>(state.range(0)), 1);
  const netdiff::ParallelOptions opts{static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(netdiff::betweenness_all(net, opts));
}
BENCHMARK(BM_Betweenness)->ArgsProduct({{20, 100, 400, 1000}, {1, 0}})->Unit(benchmark::kMillisecond);

void BM_MetricsAll(benchmark::State& state) {
  const auto net = random_graph(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(netdiff::metrics_all(net, {0}));
}
BENCHMARK(BM_MetricsAll)->Arg(20)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Louvain(benchmark::State& state) {
  const auto net = random_graph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(netdiff::louvain(net));
}
BENCHMARK(BM_Louvain)->Arg(20)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Compare(benchmark::State& state) {
  const auto a = random_graph(static_cast<std::size_t>(state.range(0)), 4);
  const auto b = random_graph(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(netdiff::compare(a, b));
}
BENCHMARK(BM_Compare)->Arg(20)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
