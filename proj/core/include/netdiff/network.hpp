#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace netdiff {

/// Node name. Surrounding whitespace is trimmed on construction; an empty
/// result throws InvalidLabel. Ordering is bytewise lexicographic.
class NodeLabel {
 public:
  explicit NodeLabel(std::string_view text);

  const std::string& str() const noexcept { return text_; }

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
  friend std::strong_ordering operator<=>(const NodeLabel& a, const NodeLabel& b) {
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  std::string text_;
};

struct EdgeRecord {
  NodeLabel source;
  NodeLabel target;
  double weight;
};

struct Neighbor {
  std::size_t index;
  double weight;
};

/// Undirected network with nonnegative edge weights over a fixed label set.
///
/// Labels are kept in ascending order, so node index i always refers to the
/// i-th smallest label. Adjacency is a dense symmetric matrix with a zero
/// diagonal; neighbor lists (ascending index) are derived once at
/// construction. Instances are immutable.
class WeightedNetwork {
 public:
  /// Builds a network from labels and a row-major N*N matrix given in the
  /// same order as `labels`. Labels need not be sorted. Throws InvalidLabel
  /// on duplicate labels, InvalidNetwork on an empty or asymmetric input,
  /// SelfLoop on a nonzero diagonal and NonPositiveWeight on negative or
  /// non-finite weights.
  static WeightedNetwork from_matrix(std::vector<NodeLabel> labels, std::vector<double> adjacency);

  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const NodeLabel> labels() const noexcept { return labels_; }
  const NodeLabel& label(std::size_t i) const { return labels_.at(i); }

  double weight(std::size_t i, std::size_t j) const { return adjacency_[i * size() + j]; }
  std::span<const Neighbor> neighbors(std::size_t i) const { return neighbors_.at(i); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::optional<std::size_t> find(const NodeLabel& label) const;
  /// Throws UnknownLabel.
  std::size_t index_of(const NodeLabel& label) const;

  friend bool operator==(const WeightedNetwork& a, const WeightedNetwork& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  WeightedNetwork() = default;

  std::vector<NodeLabel> labels_;
  std::vector<double> adjacency_;
  std::vector<std::vector<Neighbor>> neighbors_;
  std::size_t edge_count_ = 0;
};

/// Unordered label pair, stored with `first < second`.
struct LabelPair {
  NodeLabel first;
  NodeLabel second;

  /// Throws SelfLoop when a == b.
  static LabelPair canonical(NodeLabel a, NodeLabel b);

  friend bool operator==(const LabelPair&, const LabelPair&) = default;
  friend auto operator<=>(const LabelPair&, const LabelPair&) = default;
};

class EdgeSet {
 public:
  using const_iterator = std::set<LabelPair>::const_iterator;

  void insert(LabelPair pair) { pairs_.insert(std::move(pair)); }
  bool contains(const LabelPair& pair) const { return pairs_.contains(pair); }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const_iterator begin() const { return pairs_.begin(); }
  const_iterator end() const { return pairs_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::set<LabelPair> pairs_;
};

std::size_t intersection_size(const EdgeSet& a, const EdgeSet& b);
std::size_t union_size(const EdgeSet& a, const EdgeSet& b);

/// Network over the union of labels in `records` and `extra_nodes`.
/// Throws SelfLoop, NonPositiveWeight or DuplicatePair naming the record.
WeightedNetwork from_edge_list(std::span<const EdgeRecord> records,
                               std::span<const NodeLabel> extra_nodes = {});

/// Induced subnetwork without `label`. Throws UnknownLabel, or
/// CannotEmptyNetwork on a single-node network.
WeightedNetwork remove_node(const WeightedNetwork& net, const NodeLabel& label);

EdgeSet edge_set(const WeightedNetwork& net);

/// One record per edge, source < target, sorted by (source, target).
std::vector<EdgeRecord> edge_records(const WeightedNetwork& net);

}  // namespace netdiff
