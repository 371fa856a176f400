#include "netdiff/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "netdiff/error.hpp"

namespace netdiff {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string describe(std::size_t position, const EdgeRecord& r) {
  std::ostringstream os;
  os << "record " << position << " (" << r.source.str() << ", " << r.target.str() << ", "
     << r.weight << ")";
  return os.str();
}

}  // namespace

NodeLabel::NodeLabel(std::string_view text) {
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::InvalidLabel, "label is empty after trimming");
  text_ = std::string(text);
}

WeightedNetwork WeightedNetwork::from_matrix(std::vector<NodeLabel> labels,
                                             std::vector<double> adjacency) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::InvalidNetwork, "a network needs at least one node");
  if (adjacency.size() != n * n) {
    throw Error(ErrorCode::InvalidNetwork, "adjacency size does not match label count");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  for (std::size_t k = 1; k < n; ++k) {
    if (labels[order[k - 1]] == labels[order[k]]) {
      throw Error(ErrorCode::InvalidLabel, "duplicate label '" + labels[order[k]].str() + "'");
    }
  }

  WeightedNetwork net;
  net.labels_.reserve(n);
  for (std::size_t k : order) net.labels_.push_back(labels[k]);
  net.adjacency_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      net.adjacency_[i * n + j] = adjacency[order[i] * n + order[j]];
    }
  }

  net.neighbors_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double w = net.adjacency_[i * n + j];
      if (!std::isfinite(w) || w < 0.0) {
        throw Error(ErrorCode::NonPositiveWeight,
                    "weight between '" + net.labels_[i].str() + "' and '" + net.labels_[j].str() +
                        "' is negative or not finite");
      }
      if (w != net.adjacency_[j * n + i]) {
        throw Error(ErrorCode::InvalidNetwork, "adjacency is not symmetric at '" +
                                                 net.labels_[i].str() + "', '" +
                                                 net.labels_[j].str() + "'");
      }
      if (i == j && w != 0.0) {
        throw Error(ErrorCode::SelfLoop, "nonzero diagonal at '" + net.labels_[i].str() + "'");
      }
      if (w > 0.0) {
        net.neighbors_[i].push_back({j, w});
        if (i < j) ++net.edge_count_;
      }
    }
  }
  return net;
}

std::optional<std::size_t> WeightedNetwork::find(const NodeLabel& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t WeightedNetwork::index_of(const NodeLabel& label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::UnknownLabel, "'" + label.str() + "' is not in the network");
}

LabelPair LabelPair::canonical(NodeLabel a, NodeLabel b) {
  if (a == b) throw Error(ErrorCode::SelfLoop, "pair ('" + a.str() + "', '" + b.str() + "')");
  if (b < a) std::swap(a, b);
  return LabelPair{std::move(a), std::move(b)};
}

std::size_t intersection_size(const EdgeSet& a, const EdgeSet& b) {
  const EdgeSet& small = a.size() <= b.size() ? a : b;
  const EdgeSet& large = a.size() <= b.size() ? b : a;
  return static_cast<std::size_t>(std::count_if(
      small.begin(), small.end(), [&](const LabelPair& p) { return large.contains(p); }));
}

std::size_t union_size(const EdgeSet& a, const EdgeSet& b) {
  return a.size() + b.size() - intersection_size(a, b);
}

WeightedNetwork from_edge_list(std::span<const EdgeRecord> records,
                               std::span<const NodeLabel> extra_nodes) {
  std::map<LabelPair, double> weights;
  std::set<NodeLabel> labels(extra_nodes.begin(), extra_nodes.end());

  for (std::size_t k = 0; k < records.size(); ++k) {
    const EdgeRecord& r = records[k];
    if (r.source == r.target) throw Error(ErrorCode::SelfLoop, describe(k, r));
    if (!(r.weight > 0.0) || !std::isfinite(r.weight)) {
      throw Error(ErrorCode::NonPositiveWeight, describe(k, r));
    }
    auto [it, inserted] = weights.emplace(LabelPair::canonical(r.source, r.target), r.weight);
    if (!inserted) throw Error(ErrorCode::DuplicatePair, describe(k, r));
    labels.insert(r.source);
    labels.insert(r.target);
  }

  std::vector<NodeLabel> ordered(labels.begin(), labels.end());
  const std::size_t n = ordered.size();
  std::vector<double> adjacency(n * n, 0.0);
  auto index = [&](const NodeLabel& l) {
    return static_cast<std::size_t>(std::lower_bound(ordered.begin(), ordered.end(), l) -
                                    ordered.begin());
  };
  for (const auto& [pair, w] : weights) {
    const std::size_t i = index(pair.first);
    const std::size_t j = index(pair.second);
    adjacency[i * n + j] = w;
    adjacency[j * n + i] = w;
  }
  return WeightedNetwork::from_matrix(std::move(ordered), std::move(adjacency));
}

WeightedNetwork remove_node(const WeightedNetwork& net, const NodeLabel& label) {
  const std::size_t drop = net.index_of(label);
  const std::size_t n = net.size();
  if (n == 1) {
    throw Error(ErrorCode::CannotEmptyNetwork, "'" + label.str() + "' is the only node");
  }

  std::vector<NodeLabel> labels;
  labels.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != drop) labels.push_back(net.label(i));
  }
  std::vector<double> adjacency;
  adjacency.reserve((n - 1) * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == drop) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != drop) adjacency.push_back(net.weight(i, j));
    }
  }
  return WeightedNetwork::from_matrix(std::move(labels), std::move(adjacency));
}

EdgeSet edge_set(const WeightedNetwork& net) {
  EdgeSet edges;
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (const Neighbor& nb : net.neighbors(i)) {
      if (i < nb.index) edges.insert(LabelPair{net.label(i), net.label(nb.index)});
    }
  }
  return edges;
}

std::vector<EdgeRecord> edge_records(const WeightedNetwork& net) {
  std::vector<EdgeRecord> records;
  records.reserve(net.edge_count());
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (const Neighbor& nb : net.neighbors(i)) {
      if (i < nb.index) records.push_back({net.label(i), net.label(nb.index), nb.weight});
    }
  }
  return records;
}

}  // namespace netdiff
