#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "netdiff/network.hpp"

namespace netdiff {

/// Relative tolerance under which two path lengths count as equal.
inline constexpr double kPathTieTolerance = 1e-9;

/// |a - b| <= kPathTieTolerance * max(1, |a|, |b|).
bool same_length(double a, double b) noexcept;

/// Single-source shortest paths where traversing an edge of weight w costs 1/w.
struct PathSolution {
  std::size_t source = 0;
  /// +infinity for nodes unreachable from `source`.
  std::vector<double> dist;
  /// Number of distinct shortest paths from `source`; 0 when unreachable.
  std::vector<double> sigma;
  /// Immediate predecessors on shortest paths, ascending index.
  std::vector<std::vector<std::size_t>> predecessors;
  /// Reachable nodes in the order they were settled (nondecreasing dist).
  std::vector<std::size_t> settle_order;
};

std::size_t degree(const WeightedNetwork& net, const NodeLabel& node);
double strength(const WeightedNetwork& net, const NodeLabel& node);

PathSolution shortest_paths(const WeightedNetwork& net, const NodeLabel& source);
PathSolution shortest_paths(const WeightedNetwork& net, std::size_t source);

struct Closeness {
  double value = 0.0;
  /// Some node is unreachable; `value` is then 0.
  bool disconnected = false;
};

/// (N-1) / sum of distances to every other node. Throws DegenerateNetwork
/// when N = 1.
Closeness closeness(const WeightedNetwork& net, const NodeLabel& node);

/// Controls how many worker threads compute per-source path solutions.
/// 0 selects std::thread::hardware_concurrency(). Results do not depend on it.
struct ParallelOptions {
  unsigned threads = 1;
};

/// Sum over unordered pairs {j, k} (j, k != i) of the share of shortest j-k
/// paths passing through i, indexed by node. No normalization.
std::vector<double> pair_dependencies(const WeightedNetwork& net, ParallelOptions opts = {});

/// pair_dependencies / ((N-1)(N-2)/2). Throws DegenerateNetwork when N < 3.
std::map<NodeLabel, double> betweenness_all(const WeightedNetwork& net, ParallelOptions opts = {});

/// Edges present / N(N-1)/2. Throws DegenerateNetwork when N = 1.
double density(const WeightedNetwork& net);

struct NodeMetricsRow {
  NodeLabel label;
  std::size_t degree = 0;
  double strength = 0.0;
  double closeness = 0.0;
  double betweenness = 0.0;
  bool disconnected = false;

  friend bool operator==(const NodeMetricsRow&, const NodeMetricsRow&) = default;
};

/// One row per node in label order. Betweenness is 0 for every row when N < 3.
/// Throws DegenerateNetwork when N = 1.
std::vector<NodeMetricsRow> metrics_all(const WeightedNetwork& net, ParallelOptions opts = {});

}  // namespace netdiff
