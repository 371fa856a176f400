#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "netdiff/network.hpp"

namespace netdiff {

/// Node-to-community assignment. Community ids are renumbered on
/// construction so that they are contiguous from 0 in order of first
/// appearance when walking labels in ascending order.
class Partition {
 public:
  Partition() = default;
  explicit Partition(const std::map<NodeLabel, std::size_t>& assignment, double modularity = 0.0);

  const std::map<NodeLabel, std::size_t>& assignment() const noexcept { return assignment_; }
  double modularity() const noexcept { return modularity_; }
  std::size_t community_count() const noexcept { return community_count_; }

  /// Members of each community, indexed by id, labels ascending.
  std::vector<std::vector<NodeLabel>> communities() const;

  /// Communities ordered by size descending, then by lowest member label.
  std::vector<std::vector<NodeLabel>> ordered_communities() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::map<NodeLabel, std::size_t> assignment_;
  double modularity_ = 0.0;
  std::size_t community_count_ = 0;
};

/// Every node in its own community.
Partition singleton_partition(const WeightedNetwork& net);

/// Weighted Newman modularity
///   Q = 1/(2m) * sum_ij [A_ij - resolution * k_i k_j / (2m)] delta(c_i, c_j)
/// with k the node strengths and 2m the total strength. Throws
/// IncompletePartition unless `p` covers exactly the nodes of `net`, and
/// EmptyNetwork when `net` has no edges.
double modularity(const WeightedNetwork& net, const Partition& p, double resolution = 1.0);

struct LouvainOptions {
  double resolution = 1.0;
  /// Minimum modularity improvement for a node move to be taken.
  double min_gain = 1e-9;
};

/// Multi-level Louvain. Nodes are visited in ascending label order (and
/// aggregated nodes in ascending community id). A node stays put unless
/// some other community beats its current one by more than `min_gain`; among
/// equally good communities the lowest id wins. The returned partition
/// carries its modularity at resolution 1. Throws EmptyNetwork when `net`
/// has no edges.
Partition louvain(const WeightedNetwork& net, LouvainOptions opts = {});

/// Per-node string attributes, e.g. from the extra columns of a node file.
/// An empty value is treated as missing.
class AttributeTable {
 public:
  void set(const NodeLabel& node, const std::string& name, std::string value);
  /// nullptr when absent or empty.
  const std::string* get(const NodeLabel& node, const std::string& name) const;
  bool has_attribute(const std::string& name) const;

 private:
  std::map<NodeLabel, std::map<std::string, std::string>> values_;
};

inline constexpr const char* kUnknownAttributeValue = "unknown";

/// Histogram of `attribute` values per community, indexed by community id.
/// Members without a value are counted under "unknown". Throws
/// UnknownAttribute when no node carries `attribute`.
std::vector<std::map<std::string, std::size_t>> cluster_composition(const Partition& p,
                                                                    const AttributeTable& attrs,
                                                                    const std::string& attribute);

}  // namespace netdiff
