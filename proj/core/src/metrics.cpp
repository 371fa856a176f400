#include "netdiff/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <thread>
#include <utility>

#include "netdiff/error.hpp"

namespace netdiff {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kSourceBlock = 64;

void require_at_least(const WeightedNetwork& net, std::size_t n, const char* what) {
  if (net.size() < n) {
    throw Error(ErrorCode::DegenerateNetwork, std::string(what) + " needs at least " +
                                                  std::to_string(n) + " nodes, got " +
                                                  std::to_string(net.size()));
  }
}

unsigned resolve_threads(ParallelOptions opts) {
  unsigned t = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
  return std::max(1u, t);
}

// Brandes dependency of `sp.source` on every node.
std::vector<double> source_dependencies(const PathSolution& sp) {
  const std::size_t n = sp.dist.size();
  std::vector<double> delta(n, 0.0);
  for (auto it = sp.settle_order.rbegin(); it != sp.settle_order.rend(); ++it) {
    const std::size_t w = *it;
    for (std::size_t v : sp.predecessors[w]) {
      delta[v] += sp.sigma[v] / sp.sigma[w] * (1.0 + delta[w]);
    }
  }
  delta[sp.source] = 0.0;
  return delta;
}

// Runs `work(source)` for every source and hands each result to `merge` in
// ascending source order, regardless of the number of threads.
template <typename Result>
void for_each_source(std::size_t n, ParallelOptions opts,
                     const std::function<Result(std::size_t)>& work,
                     const std::function<void(std::size_t, Result&)>& merge) {
  const unsigned threads = resolve_threads(opts);
  std::vector<Result> block(kSourceBlock);
  for (std::size_t begin = 0; begin < n; begin += kSourceBlock) {
    const std::size_t count = std::min(kSourceBlock, n - begin);
    if (threads == 1 || count == 1) {
      for (std::size_t k = 0; k < count; ++k) block[k] = work(begin + k);
    } else {
      std::vector<std::jthread> pool;
      const unsigned used = static_cast<unsigned>(std::min<std::size_t>(threads, count));
      pool.reserve(used);
      for (unsigned t = 0; t < used; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t k = t; k < count; k += used) block[k] = work(begin + k);
        });
      }
    }
    for (std::size_t k = 0; k < count; ++k) merge(begin + k, block[k]);
  }
}

Closeness closeness_from(const PathSolution& sp) {
  double total = 0.0;
  for (std::size_t j = 0; j < sp.dist.size(); ++j) {
    if (j == sp.source) continue;
    if (std::isinf(sp.dist[j])) return {0.0, true};
    total += sp.dist[j];
  }
  return {static_cast<double>(sp.dist.size() - 1) / total, false};
}

double normalize_betweenness(double raw, std::size_t n) {
  const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
  return raw / pairs;
}

}  // namespace

bool same_length(double a, double b) noexcept {
  if (a == b) return true;
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kPathTieTolerance * scale;
}

std::size_t degree(const WeightedNetwork& net, const NodeLabel& node) {
  return net.neighbors(net.index_of(node)).size();
}

double strength(const WeightedNetwork& net, const NodeLabel& node) {
  double total = 0.0;
  for (const Neighbor& nb : net.neighbors(net.index_of(node))) total += nb.weight;
  return total;
}

PathSolution shortest_paths(const WeightedNetwork& net, const NodeLabel& source) {
  return shortest_paths(net, net.index_of(source));
}

// Dijkstra over lengths 1/w, counting shortest paths. Lengths that agree
// within kPathTieTolerance are treated as one length so that sums like
// 1/3 + 1/6 and 1/2 still tie.
PathSolution shortest_paths(const WeightedNetwork& net, std::size_t source) {
  const std::size_t n = net.size();
  PathSolution sp;
  sp.source = source;
  sp.dist.assign(n, kInf);
  sp.sigma.assign(n, 0.0);
  sp.predecessors.assign(n, {});
  sp.settle_order.reserve(n);

  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<bool> settled(n, false);

  sp.dist[source] = 0.0;
  sp.sigma[source] = 1.0;
  queue.emplace(0.0, source);

  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (settled[v] || d != sp.dist[v]) continue;
    settled[v] = true;
    sp.settle_order.push_back(v);

    for (const Neighbor& nb : net.neighbors(v)) {
      const std::size_t w = nb.index;
      if (settled[w]) continue;
      const double candidate = d + 1.0 / nb.weight;
      if (std::isinf(sp.dist[w]) ||
          (candidate < sp.dist[w] && !same_length(candidate, sp.dist[w]))) {
        sp.dist[w] = candidate;
        sp.sigma[w] = sp.sigma[v];
        sp.predecessors[w].assign(1, v);
        queue.emplace(candidate, w);
      } else if (same_length(candidate, sp.dist[w])) {
        sp.sigma[w] += sp.sigma[v];
        sp.predecessors[w].push_back(v);
        if (candidate < sp.dist[w]) {
          sp.dist[w] = candidate;
          queue.emplace(candidate, w);
        }
      }
    }
  }

  for (auto& preds : sp.predecessors) std::sort(preds.begin(), preds.end());
  return sp;
}

Closeness closeness(const WeightedNetwork& net, const NodeLabel& node) {
  const std::size_t i = net.index_of(node);
  require_at_least(net, 2, "closeness");
  return closeness_from(shortest_paths(net, i));
}

std::vector<double> pair_dependencies(const WeightedNetwork& net, ParallelOptions opts) {
  const std::size_t n = net.size();
  std::vector<double> total(n, 0.0);
  for_each_source<std::vector<double>>(
      n, opts, [&](std::size_t s) { return source_dependencies(shortest_paths(net, s)); },
      [&](std::size_t, std::vector<double>& delta) {
        for (std::size_t v = 0; v < n; ++v) total[v] += delta[v];
      });
  // Every unordered pair was visited once from each endpoint.
  for (double& x : total) x /= 2.0;
  return total;
}

std::map<NodeLabel, double> betweenness_all(const WeightedNetwork& net, ParallelOptions opts) {
  require_at_least(net, 3, "betweenness");
  const std::vector<double> raw = pair_dependencies(net, opts);
  std::map<NodeLabel, double> out;
  for (std::size_t i = 0; i < net.size(); ++i) {
    out.emplace(net.label(i), normalize_betweenness(raw[i], net.size()));
  }
  return out;
}

double density(const WeightedNetwork& net) {
  require_at_least(net, 2, "density");
  const double n = static_cast<double>(net.size());
  return static_cast<double>(net.edge_count()) / (n * (n - 1.0) / 2.0);
}

std::vector<NodeMetricsRow> metrics_all(const WeightedNetwork& net, ParallelOptions opts) {
  require_at_least(net, 2, "metrics");
  const std::size_t n = net.size();

  struct PerSource {
    Closeness closeness;
    std::vector<double> delta;
  };

  std::vector<NodeMetricsRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    NodeMetricsRow row{net.label(i)};
    row.degree = net.neighbors(i).size();
    for (const Neighbor& nb : net.neighbors(i)) row.strength += nb.weight;
    rows.push_back(std::move(row));
  }

  std::vector<double> raw(n, 0.0);
  for_each_source<PerSource>(
      n, opts,
      [&](std::size_t s) {
        PathSolution sp = shortest_paths(net, s);
        return PerSource{closeness_from(sp), source_dependencies(sp)};
      },
      [&](std::size_t s, PerSource& r) {
        rows[s].closeness = r.closeness.value;
        rows[s].disconnected = r.closeness.disconnected;
        for (std::size_t v = 0; v < n; ++v) raw[v] += r.delta[v];
      });

  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      rows[i].betweenness = normalize_betweenness(raw[i] / 2.0, n);
    }
  }
  return rows;
}

}  // namespace netdiff
