#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netdiff/cluster.hpp"
#include "netdiff/metrics.hpp"
#include "netdiff/network.hpp"

namespace netdiff {

struct RenderOptions {
  double min_penwidth = 0.5;
  double penwidth_per_weight = 0.5;
  std::optional<Partition> color_by_partition;
  std::string layout_hint = "neato";
};

/// Fill colors for communities; community id c uses entry c % 12.
inline constexpr std::array<std::string_view, 12> kCommunityPalette = {
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928"};

/// Undirected DOT document. Nodes in label order, then edges in
/// (source, target) order with penwidth = min_penwidth +
/// penwidth_per_weight * weight. Throws InvalidArgument when a penwidth
/// parameter is not positive.
std::string to_dot(const WeightedNetwork& net, const RenderOptions& opts = {});

struct MetricColumns {
  bool degree = true;
  bool strength = true;
  bool closeness = true;
  bool betweenness = true;
};

/// Aligned plain-text table. Closeness and betweenness use 3 decimals.
/// Throws EmptyInput on no rows.
std::string metrics_table(std::span<const NodeMetricsRow> rows, MetricColumns columns = {});

/// `label,degree,strength,closeness,betweenness` (restricted to the selected
/// columns). Strength uses round-trip precision.
std::string metrics_csv(std::span<const NodeMetricsRow> rows, MetricColumns columns = {});

struct NamedMetrics {
  std::string name;
  std::vector<NodeMetricsRow> rows;
};

/// Side-by-side table over the union of labels; nodes missing from a network
/// show "--". Throws EmptyInput when there are no networks or no rows at all.
std::string juxtaposed_table(std::span<const NamedMetrics> networks,
                             MetricColumns columns = {false, false, true, true});
std::string juxtaposed_csv(std::span<const NamedMetrics> networks,
                           MetricColumns columns = {false, false, true, true});

}  // namespace netdiff
