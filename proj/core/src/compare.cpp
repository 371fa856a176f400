#include "netdiff/compare.hpp"

#include <algorithm>
#include <cmath>

#include "netdiff/error.hpp"
#include "netdiff/metrics.hpp"

namespace netdiff {
namespace {

template <typename PerNode>
std::vector<double> aligned_vector(const WeightedNetwork& net,
                                   const std::vector<std::optional<std::size_t>>& index,
                                   PerNode per_node) {
  std::vector<double> out(index.size(), 0.0);
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k]) out[k] = per_node(net, *index[k]);
  }
  return out;
}

double cosine(const std::vector<double>& x, const std::vector<double>& y) {
  double dot = 0.0, xx = 0.0, yy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    dot += x[k] * y[k];
    xx += x[k] * x[k];
    yy += y[k] * y[k];
  }
  if (xx == 0.0 || yy == 0.0) return 0.0;
  return std::clamp(dot / std::sqrt(xx * yy), 0.0, 1.0);
}

double node_degree(const WeightedNetwork& net, std::size_t i) {
  return static_cast<double>(net.neighbors(i).size());
}

double node_strength(const WeightedNetwork& net, std::size_t i) {
  double total = 0.0;
  for (const Neighbor& nb : net.neighbors(i)) total += nb.weight;
  return total;
}

}  // namespace

NodeAlignment align_nodes(const WeightedNetwork& a, const WeightedNetwork& b) {
  NodeAlignment out;
  const auto la = a.labels();
  const auto lb = b.labels();
  std::set_union(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(out.node_union));
  out.index_a.reserve(out.node_union.size());
  out.index_b.reserve(out.node_union.size());
  for (const NodeLabel& label : out.node_union) {
    out.index_a.push_back(a.find(label));
    out.index_b.push_back(b.find(label));
  }
  return out;
}

double ndc(const WeightedNetwork& a, const WeightedNetwork& b) {
  const NodeAlignment al = align_nodes(a, b);
  return cosine(aligned_vector(a, al.index_a, node_degree),
                aligned_vector(b, al.index_b, node_degree));
}

double nsc(const WeightedNetwork& a, const WeightedNetwork& b) {
  const NodeAlignment al = align_nodes(a, b);
  return cosine(aligned_vector(a, al.index_a, node_strength),
                aligned_vector(b, al.index_b, node_strength));
}

double eej(const WeightedNetwork& a, const WeightedNetwork& b) {
  const EdgeSet ea = edge_set(a);
  const EdgeSet eb = edge_set(b);
  const std::size_t shared = intersection_size(ea, eb);
  const std::size_t all = ea.size() + eb.size() - shared;
  if (all == 0) throw Error(ErrorCode::EmptyUnion, "neither network has an edge");
  return static_cast<double>(shared) / static_cast<double>(all);
}

ComparisonReport compare(const WeightedNetwork& a, const WeightedNetwork& b) {
  ComparisonReport report;
  report.ndc = ndc(a, b);
  report.nsc = nsc(a, b);
  report.eej = eej(a, b);
  report.density_a = density(a);
  report.density_b = density(b);

  NodeAlignment al = align_nodes(a, b);
  for (std::size_t k = 0; k < al.node_union.size(); ++k) {
    if (!al.index_b[k]) report.only_in_a.push_back(al.node_union[k]);
    if (!al.index_a[k]) report.only_in_b.push_back(al.node_union[k]);
  }
  report.node_union = std::move(al.node_union);
  return report;
}

}  // namespace netdiff
