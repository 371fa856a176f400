#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "netdiff/network.hpp"

namespace netdiff {

/// Sorted union of two label sets with each network's index for every entry.
struct NodeAlignment {
  std::vector<NodeLabel> node_union;
  std::vector<std::optional<std::size_t>> index_a;
  std::vector<std::optional<std::size_t>> index_b;
};

NodeAlignment align_nodes(const WeightedNetwork& a, const WeightedNetwork& b);

// The cosines are taken over the aligned node union, with 0 for nodes a
// network lacks. An all-zero vector on either side gives 0.
double ndc(const WeightedNetwork& a, const WeightedNetwork& b);
double nsc(const WeightedNetwork& a, const WeightedNetwork& b);

/// Shared edges / edges in either network, ignoring weights. Throws
/// EmptyUnion when neither network has an edge.
double eej(const WeightedNetwork& a, const WeightedNetwork& b);

struct ComparisonReport {
  double ndc = 0.0;
  double nsc = 0.0;
  double eej = 0.0;
  double density_a = 0.0;
  double density_b = 0.0;
  std::vector<NodeLabel> node_union;
  std::vector<NodeLabel> only_in_a;
  std::vector<NodeLabel> only_in_b;
};

ComparisonReport compare(const WeightedNetwork& a, const WeightedNetwork& b);

}  // namespace netdiff
