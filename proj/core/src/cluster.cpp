#include "netdiff/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netdiff/error.hpp"

namespace netdiff {

Partition::Partition(const std::map<NodeLabel, std::size_t>& assignment, double modularity)
    : modularity_(modularity) {
  std::map<std::size_t, std::size_t> renumber;
  for (const auto& [label, id] : assignment) {
    auto [it, inserted] = renumber.emplace(id, renumber.size());
    assignment_.emplace(label, it->second);
  }
  community_count_ = renumber.size();
}

std::vector<std::vector<NodeLabel>> Partition::communities() const {
  std::vector<std::vector<NodeLabel>> out(community_count_);
  for (const auto& [label, id] : assignment_) out[id].push_back(label);
  return out;
}

std::vector<std::vector<NodeLabel>> Partition::ordered_communities() const {
  auto out = communities();
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

Partition singleton_partition(const WeightedNetwork& net) {
  std::map<NodeLabel, std::size_t> assignment;
  for (std::size_t i = 0; i < net.size(); ++i) assignment.emplace(net.label(i), i);
  return Partition(assignment);
}

namespace {

// Community id of every node of `net`, in node index order.
std::vector<std::size_t> community_vector(const WeightedNetwork& net, const Partition& p) {
  const auto& assignment = p.assignment();
  if (assignment.size() != net.size()) {
    throw Error(ErrorCode::IncompletePartition,
                "partition has " + std::to_string(assignment.size()) + " nodes, network has " +
                    std::to_string(net.size()));
  }
  std::vector<std::size_t> community(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    auto it = assignment.find(net.label(i));
    if (it == assignment.end()) {
      throw Error(ErrorCode::IncompletePartition, "'" + net.label(i).str() + "' is unassigned");
    }
    community[i] = it->second;
  }
  return community;
}

// Working graph for one Louvain level. `self[i]` is the weight of all
// ordered pairs collapsed into node i, so row sums of the full matrix stay
// equal to the original strengths.
struct LevelGraph {
  std::vector<std::vector<Neighbor>> adjacent;
  std::vector<double> self;
  std::vector<double> strength;

  std::size_t size() const { return adjacent.size(); }
};

LevelGraph level_from(const WeightedNetwork& net) {
  LevelGraph g;
  const std::size_t n = net.size();
  g.adjacent.resize(n);
  g.self.assign(n, 0.0);
  g.strength.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Neighbor& nb : net.neighbors(i)) {
      g.adjacent[i].push_back(nb);
      g.strength[i] += nb.weight;
    }
  }
  return g;
}

// One local-moving phase. Returns true if any node changed community.
bool move_nodes(const LevelGraph& g, double two_m, const LouvainOptions& opts,
                std::vector<std::size_t>& community) {
  const std::size_t n = g.size();
  const double m = two_m / 2.0;
  std::vector<double> total(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) total[community[i]] += g.strength[i];

  std::vector<double> link(n, 0.0);
  std::vector<std::size_t> touched;
  bool any_move = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t current = community[i];
      const double k = g.strength[i];

      touched.clear();
      for (const Neighbor& nb : g.adjacent[i]) {
        const std::size_t c = community[nb.index];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += nb.weight;
      }
      std::sort(touched.begin(), touched.end());

      total[current] -= k;
      // Gain of joining c, scaled by m relative to the modularity change.
      auto gain = [&](std::size_t c) {
        return link[c] - opts.resolution * total[c] * k / two_m;
      };
      const double stay = gain(current);
      std::size_t best = current;
      double best_gain = -std::numeric_limits<double>::infinity();
      for (std::size_t c : touched) {
        if (c == current) continue;
        const double g_c = gain(c);
        if (g_c > best_gain) {
          best_gain = g_c;
          best = c;
        }
      }
      if (best == current || (best_gain - stay) / m <= opts.min_gain) best = current;

      total[best] += k;
      if (best != current) {
        community[i] = best;
        moved = true;
        any_move = true;
      }
      for (std::size_t c : touched) link[c] = 0.0;
    }
  }
  return any_move;
}

// Renumbers `community` densely by first appearance; returns the count.
std::size_t renumber(std::vector<std::size_t>& community) {
  std::vector<std::size_t> map(community.size(), std::numeric_limits<std::size_t>::max());
  std::size_t next = 0;
  for (std::size_t& c : community) {
    if (map[c] == std::numeric_limits<std::size_t>::max()) map[c] = next++;
    c = map[c];
  }
  return next;
}

LevelGraph aggregate(const LevelGraph& g, const std::vector<std::size_t>& community,
                     std::size_t count) {
  std::vector<std::map<std::size_t, double>> links(count);
  LevelGraph out;
  out.self.assign(count, 0.0);
  out.strength.assign(count, 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::size_t ci = community[i];
    out.self[ci] += g.self[i];
    out.strength[ci] += g.strength[i];
    for (const Neighbor& nb : g.adjacent[i]) {
      const std::size_t cj = community[nb.index];
      if (ci == cj) {
        out.self[ci] += nb.weight;
      } else {
        links[ci][cj] += nb.weight;
      }
    }
  }
  out.adjacent.resize(count);
  for (std::size_t c = 0; c < count; ++c) {
    for (const auto& [d, w] : links[c]) out.adjacent[c].push_back({d, w});
  }
  return out;
}

}  // namespace

double modularity(const WeightedNetwork& net, const Partition& p, double resolution) {
  const std::vector<std::size_t> community = community_vector(net, p);
  if (net.edge_count() == 0) throw Error(ErrorCode::EmptyNetwork, "network has no edges");

  const std::size_t count = p.community_count();
  std::vector<double> inside(count, 0.0);
  std::vector<double> total(count, 0.0);
  double two_m = 0.0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (const Neighbor& nb : net.neighbors(i)) {
      two_m += nb.weight;
      total[community[i]] += nb.weight;
      if (community[i] == community[nb.index]) inside[community[i]] += nb.weight;
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < count; ++c) {
    const double share = total[c] / two_m;
    q += inside[c] / two_m - resolution * share * share;
  }
  return q;
}

Partition louvain(const WeightedNetwork& net, LouvainOptions opts) {
  if (net.edge_count() == 0) throw Error(ErrorCode::EmptyNetwork, "network has no edges");
  if (!(opts.resolution > 0.0) || !std::isfinite(opts.resolution)) {
    throw Error(ErrorCode::InvalidArgument, "resolution must be positive and finite");
  }
  if (!(opts.min_gain >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "min_gain must be nonnegative");
  }

  LevelGraph level = level_from(net);
  double two_m = 0.0;
  for (double k : level.strength) two_m += k;

  // membership[i] = current-level node holding original node i.
  std::vector<std::size_t> membership(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) membership[i] = i;

  while (true) {
    std::vector<std::size_t> community(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) community[i] = i;
    if (!move_nodes(level, two_m, opts, community)) break;
    const std::size_t count = renumber(community);
    for (std::size_t& m : membership) m = community[m];
    level = aggregate(level, community, count);
  }

  std::map<NodeLabel, std::size_t> assignment;
  for (std::size_t i = 0; i < net.size(); ++i) assignment.emplace(net.label(i), membership[i]);
  Partition flat(assignment);
  return Partition(flat.assignment(), modularity(net, flat));
}

void AttributeTable::set(const NodeLabel& node, const std::string& name, std::string value) {
  values_[node][name] = std::move(value);
}

const std::string* AttributeTable::get(const NodeLabel& node, const std::string& name) const {
  auto row = values_.find(node);
  if (row == values_.end()) return nullptr;
  auto cell = row->second.find(name);
  if (cell == row->second.end() || cell->second.empty()) return nullptr;
  return &cell->second;
}

bool AttributeTable::has_attribute(const std::string& name) const {
  return std::any_of(values_.begin(), values_.end(), [&](const auto& row) {
    auto cell = row.second.find(name);
    return cell != row.second.end() && !cell->second.empty();
  });
}

std::vector<std::map<std::string, std::size_t>> cluster_composition(
    const Partition& p, const AttributeTable& attrs, const std::string& attribute) {
  if (!attrs.has_attribute(attribute)) {
    throw Error(ErrorCode::UnknownAttribute, "no node has attribute '" + attribute + "'");
  }
  std::vector<std::map<std::string, std::size_t>> out(p.community_count());
  for (const auto& [label, id] : p.assignment()) {
    const std::string* value = attrs.get(label, attribute);
    ++out[id][value ? *value : kUnknownAttributeValue];
  }
  return out;
}

}  // namespace netdiff
