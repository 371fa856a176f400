#include "netdiff/cluster.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "../support/expect_error.hpp"
#include "../support/oracles.hpp"
#include "netdiff/error.hpp"

namespace netdiff {
namespace {

using testing::code_of;
using testing::network;

std::vector<std::size_t> ids(const WeightedNetwork& net, const Partition& p) {
  std::vector<std::size_t> out;
  for (const NodeLabel& l : net.labels()) out.push_back(p.assignment().at(l));
  return out;
}

Partition from_ids(const WeightedNetwork& net, const std::vector<std::size_t>& c) {
  std::map<NodeLabel, std::size_t> m;
  for (std::size_t i = 0; i < net.size(); ++i) m.emplace(net.label(i), c[i]);
  return Partition(m);
}

WeightedNetwork triangle() { return network({{"A", "B", 1}, {"B", "C", 1}, {"A", "C", 1}}); }

WeightedNetwork two_triangles(std::optional<double> bridge) {
  std::vector<EdgeRecord> r = {{NodeLabel("a1"), NodeLabel("a2"), 1}, {NodeLabel("a2"), NodeLabel("a3"), 1},
                               {NodeLabel("a1"), NodeLabel("a3"), 1}, {NodeLabel("b1"), NodeLabel("b2"), 1},
                               {NodeLabel("b2"), NodeLabel("b3"), 1}, {NodeLabel("b1"), NodeLabel("b3"), 1}};
  if (bridge) r.push_back({NodeLabel("a3"), NodeLabel("b1"), *bridge});
  return from_edge_list(r, {});
}

// Three triangles joined in a ring by single unit edges.
WeightedNetwork ring_of_triangles() {
  return network({{"a1", "a2", 1}, {"a2", "a3", 1}, {"a1", "a3", 1},
                  {"b1", "b2", 1}, {"b2", "b3", 1}, {"b1", "b3", 1},
                  {"c1", "c2", 1}, {"c2", "c3", 1}, {"c1", "c3", 1},
                  {"a3", "b1", 1}, {"b3", "c1", 1}, {"c3", "a1", 1}});
}

TEST(Partition, RenumbersByFirstAppearance) {
  const Partition p({{NodeLabel("A"), 7}, {NodeLabel("B"), 3}, {NodeLabel("C"), 7}});
  EXPECT_EQ(p.assignment().at(NodeLabel("A")), 0u);
  EXPECT_EQ(p.assignment().at(NodeLabel("B")), 1u);
  EXPECT_EQ(p.community_count(), 2u);
  const auto ordered = p.ordered_communities();
  ASSERT_EQ(ordered.size(), 2u);
  EXPECT_EQ(ordered[0], (std::vector<NodeLabel>{NodeLabel("A"), NodeLabel("C")}));
}

TEST(Modularity, TriangleSingletons) {
  EXPECT_NEAR(modularity(triangle(), singleton_partition(triangle())), -1.0 / 3.0, 1e-12);
}

TEST(Modularity, TwoTrianglesNaturalSplit) {
  const auto net = two_triangles(std::nullopt);
  const auto p = from_ids(net, {0, 0, 0, 1, 1, 1});
  EXPECT_NEAR(modularity(net, p), 0.5, 1e-12);
  EXPECT_NEAR(testing::brute_modularity(net, {0, 0, 0, 1, 1, 1}), 0.5, 1e-12);
}

TEST(Modularity, ClosedFormsForTrivialPartitions) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto net = testing::random_network(rng, 3 + trial % 8, 0.5, trial % 2 == 0);
    if (net.edge_count() == 0) continue;
    std::vector<double> k(net.size(), 0.0);
    double two_m = 0;
    for (std::size_t i = 0; i < net.size(); ++i) {
      for (std::size_t j = 0; j < net.size(); ++j) k[i] += net.weight(i, j);
      two_m += k[i];
    }
    double sum_sq = 0;
    for (double x : k) sum_sq += x * x;
    // One community: 1 - (sum k)^2 / (2m)^2 = 0. Singletons: -sum k^2 / (2m)^2.
    const std::vector<std::size_t> one(net.size(), 0);
    const double q = modularity(net, from_ids(net, one));
    EXPECT_NEAR(q, 0.0, 1e-12);
    EXPECT_NEAR(q, testing::brute_modularity(net, one), 1e-12);
    std::vector<std::size_t> each(net.size());
    for (std::size_t i = 0; i < each.size(); ++i) each[i] = i;
    const double qs = modularity(net, singleton_partition(net));
    EXPECT_NEAR(qs, -sum_sq / (two_m * two_m), 1e-12);
    EXPECT_NEAR(qs, testing::brute_modularity(net, each), 1e-12);
  }
}

TEST(Modularity, MatchesDirectSumOnRandomPartitions) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto net = testing::random_network(rng, 3 + trial % 8, 0.5, trial % 2 == 0);
    if (net.edge_count() == 0) continue;
    std::vector<std::size_t> c(net.size());
    for (auto& x : c) x = rng() % 3;
    const double q = modularity(net, from_ids(net, c));
    EXPECT_NEAR(q, testing::brute_modularity(net, c), 1e-12);
    EXPECT_GE(q, -1.0);
    EXPECT_LE(q, 1.0);
    EXPECT_NEAR(modularity(testing::scaled(net, 3.5), from_ids(net, c)), q, 1e-12);
  }
}

TEST(Modularity, Errors) {
  const auto net = triangle();
  EXPECT_EQ(code_of([&] { modularity(net, Partition({{NodeLabel("A"), 0}})); }),
            ErrorCode::IncompletePartition);
  EXPECT_EQ(code_of([&] {
              modularity(net, Partition({{NodeLabel("A"), 0}, {NodeLabel("B"), 0}, {NodeLabel("Z"), 0}}));
            }),
            ErrorCode::IncompletePartition);
  const auto empty = network({}, {"A", "B"});
  EXPECT_EQ(code_of([&] { modularity(empty, singleton_partition(empty)); }), ErrorCode::EmptyNetwork);
}

TEST(Louvain, BridgedTrianglesSplit) {
  const auto net = two_triangles(0.1);
  const Partition p = louvain(net);
  EXPECT_EQ(ids(net, p), (std::vector<std::size_t>{0, 0, 0, 1, 1, 1}));
  const auto best = testing::best_partition(net);
  EXPECT_NEAR(p.modularity(), best.modularity, 1e-12);
  EXPECT_NEAR(p.modularity(), modularity(net, p), 1e-15);
}

TEST(Louvain, RingOfTrianglesReachesExhaustiveOptimum) {
  const auto net = ring_of_triangles();
  const Partition p = louvain(net);
  const auto best = testing::best_partition(net);
  EXPECT_NEAR(p.modularity(), best.modularity, 1e-12);
  EXPECT_EQ(p.community_count(), 3u);
}

TEST(Louvain, CompleteGraphBeatsEveryTwoWaySplit) {
  const auto k4 = network({{"A", "B", 1}, {"A", "C", 1}, {"A", "D", 1},
                           {"B", "C", 1}, {"B", "D", 1}, {"C", "D", 1}});
  const Partition p = louvain(k4);
  EXPECT_EQ(p.community_count(), 1u);
  testing::for_each_set_partition(4, [&](const std::vector<std::size_t>& c) {
    if (*std::max_element(c.begin(), c.end()) == 1) {
      EXPECT_GE(p.modularity(), testing::brute_modularity(k4, c) - 1e-12);
    }
  });
}

TEST(Louvain, SingleEdgeAndIsolatedNodes) {
  const auto net = network({{"A", "B", 2}}, {"C", "D"});
  const Partition p = louvain(net);
  EXPECT_EQ(p.assignment().at(NodeLabel("A")), p.assignment().at(NodeLabel("B")));
  EXPECT_EQ(p.community_count(), 3u);
  EXPECT_NE(p.assignment().at(NodeLabel("C")), p.assignment().at(NodeLabel("D")));
}

TEST(Louvain, Errors) {
  EXPECT_EQ(code_of([] { louvain(network({}, {"A", "B"})); }), ErrorCode::EmptyNetwork);
  EXPECT_EQ(code_of([] { louvain(triangle(), {0.0}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { louvain(triangle(), {1.0, -1.0}); }), ErrorCode::InvalidArgument);
}

TEST(Louvain, ResolutionChangesGranularity) {
  const auto net = ring_of_triangles();
  EXPECT_EQ(louvain(net, {0.05}).community_count(), 1u);
  EXPECT_EQ(louvain(net, {5.0}).community_count(), 9u);
}

TEST(LouvainProperties, DeterministicScaleInvariantAndNoWorseThanSingletons) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 120; ++trial) {
    const auto net = testing::random_network(rng, 3 + trial % 12, 0.35, trial % 2 == 0);
    if (net.edge_count() == 0) continue;
    const Partition p = louvain(net);
    EXPECT_EQ(louvain(net), p);
    EXPECT_GE(p.modularity(), modularity(net, singleton_partition(net)) - 1e-12);
    EXPECT_NEAR(p.modularity(), modularity(net, p), 1e-12);
    EXPECT_EQ(louvain(testing::scaled(net, 2.0)).assignment(), p.assignment());
    if (net.size() <= 8) {
      EXPECT_LE(p.modularity(), testing::best_partition(net).modularity + 1e-12);
    }
    // Community ids are contiguous.
    std::set<std::size_t> seen;
    for (const auto& [label, id] : p.assignment()) seen.insert(id);
    EXPECT_EQ(seen.size(), p.community_count());
    EXPECT_EQ(*seen.rbegin(), p.community_count() - 1);
  }
}

TEST(Composition, CountsValuesAndUnknown) {
  AttributeTable attrs;
  attrs.set(NodeLabel("A"), "moral", "good");
  attrs.set(NodeLabel("B"), "moral", "evil");
  attrs.set(NodeLabel("C"), "moral", "good");
  attrs.set(NodeLabel("D"), "moral", "");
  const Partition p({{NodeLabel("A"), 0}, {NodeLabel("B"), 0}, {NodeLabel("C"), 0}, {NodeLabel("D"), 1}});
  const auto c = cluster_composition(p, attrs, "moral");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (std::map<std::string, std::size_t>{{"good", 2}, {"evil", 1}}));
  EXPECT_EQ(c[1], (std::map<std::string, std::size_t>{{kUnknownAttributeValue, 1}}));
  EXPECT_EQ(code_of([&] { cluster_composition(p, attrs, "order"); }), ErrorCode::UnknownAttribute);
}

struct Deity {
  const char* name;
  const char* order;
  const char* moral;
};

// Traditional two-axis alignments of the deities in two of the reported clusters.
constexpr Deity kFirst[] = {{"Erastil", "lawful", "good"},   {"Gorum", "chaotic", "neutral"},
                            {"Gozreh", "neutral", "neutral"}, {"Nethys", "neutral", "neutral"},
                            {"Pharasma", "neutral", "neutral"}, {"Urgathoa", "neutral", "evil"}};
constexpr Deity kThird[] = {{"Asmodeus", "lawful", "evil"},  {"Desna", "chaotic", "good"},
                            {"Lamashtu", "chaotic", "evil"}, {"Rovagug", "chaotic", "evil"},
                            {"Sarenrae", "neutral", "good"}, {"Shelyn", "neutral", "good"},
                            {"Zon-Kuthon", "lawful", "evil"}};

TEST(Composition, AlignmentTraitsPerCluster) {
  AttributeTable attrs;
  std::map<NodeLabel, std::size_t> assignment;
  for (const Deity& d : kFirst) {
    attrs.set(NodeLabel(d.name), "order", d.order);
    attrs.set(NodeLabel(d.name), "moral", d.moral);
    assignment.emplace(NodeLabel(d.name), 0);
  }
  for (const Deity& d : kThird) {
    attrs.set(NodeLabel(d.name), "order", d.order);
    attrs.set(NodeLabel(d.name), "moral", d.moral);
    assignment.emplace(NodeLabel(d.name), 1);
  }
  const Partition p(assignment);
  const auto first = p.assignment().at(NodeLabel("Erastil"));
  const auto third = p.assignment().at(NodeLabel("Asmodeus"));
  const auto moral = cluster_composition(p, attrs, "moral");
  const auto order = cluster_composition(p, attrs, "order");

  EXPECT_EQ(moral[first].at("good"), 1u);
  EXPECT_EQ(moral[first].at("evil"), 1u);
  EXPECT_EQ(order[first].at("lawful"), 1u);
  EXPECT_EQ(order[first].at("chaotic"), 1u);

  EXPECT_EQ(moral[third].at("good"), 3u);
  EXPECT_EQ(moral[third].at("evil"), 4u);
  EXPECT_EQ(order[third].at("lawful"), 2u);
  EXPECT_EQ(order[third].at("chaotic"), 3u);
}

}  // namespace
}  // namespace netdiff
