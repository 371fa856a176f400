#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netdiff/cluster.hpp"
#include "netdiff/compare.hpp"
#include "netdiff/network.hpp"

namespace netdiff {

// CSV as used by every file format here: comma separated, double-quote
// escaping, optional UTF-8 BOM and CRLF line endings. The first row is a
// header. Malformed input throws ParseError.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(std::string_view text);
std::string csv_field(std::string_view value);

/// `source,target,weight` rows.
std::vector<EdgeRecord> read_edge_list(std::istream& in);
/// Header plus one row per edge, source < target, sorted by (source, target).
void write_edge_list(std::ostream& out, const WeightedNetwork& net);

/// Node file: a `label` column plus any attribute columns.
struct NodeFile {
  std::vector<NodeLabel> labels;
  AttributeTable attributes;
  std::vector<std::string> attribute_names;
};

NodeFile read_node_file(std::istream& in);
void write_node_file(std::ostream& out, std::span<const NodeLabel> labels);

std::string read_file(const std::string& path);

/// `{"ndc":..,"nsc":..,"eej":..,"density_a":..,"density_b":..,
///   "only_in_a":[..],"only_in_b":[..]}` with round-trip number precision.
std::string comparison_json(const ComparisonReport& report);

/// `{"communities": [[labels...], ...], "modularity": q}` with communities
/// ordered by size descending then lowest label. When `composition` is
/// given, a `"composition"` array follows in the same community order.
std::string partition_json(const Partition& p,
                           const std::vector<std::map<std::string, std::size_t>>* composition =
                               nullptr,
                           const std::string& attribute = {});

/// Reads the `communities` list written by partition_json. Throws ParseError.
Partition parse_partition_json(std::string_view text);

}  // namespace netdiff
