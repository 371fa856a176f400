#include "netdiff/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "netdiff/error.hpp"
#include "netdiff/format.hpp"
#include "netdiff/io.hpp"

namespace netdiff {
namespace {

std::string quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<std::string> selected_names(MetricColumns c) {
  std::vector<std::string> names;
  if (c.degree) names.emplace_back("degree");
  if (c.strength) names.emplace_back("strength");
  if (c.closeness) names.emplace_back("closeness");
  if (c.betweenness) names.emplace_back("betweenness");
  return names;
}

std::vector<std::string> cells(const NodeMetricsRow& row, MetricColumns c) {
  std::vector<std::string> out;
  if (c.degree) out.push_back(std::to_string(row.degree));
  if (c.strength) out.push_back(format_shortest(row.strength));
  if (c.closeness) out.push_back(format_fixed(row.closeness, 3));
  if (c.betweenness) out.push_back(format_fixed(row.betweenness, 3));
  return out;
}

// Label column left-aligned, the rest right-aligned, two spaces apart. Header
// rows above the last one (group names) are left-aligned throughout.
std::string aligned(const std::vector<std::vector<std::string>>& header_rows,
                     const std::vector<std::vector<std::string>>& body) {
  std::vector<std::size_t> width;
  auto widen = [&](const std::vector<std::string>& row) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  };
  for (const auto& r : header_rows) widen(r);
  for (const auto& r : body) widen(r);

  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row, bool left) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      const std::string pad(width[c] - row[c].size(), ' ');
      line += (c == 0 || left) ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  };
  for (std::size_t r = 0; r < header_rows.size(); ++r) {
    emit(header_rows[r], r + 1 < header_rows.size());
  }
  std::size_t total = 0;
  for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c > 0 ? 2 : 0);
  os << std::string(total, '-') << '\n';
  for (const auto& r : body) emit(r, false);
  return os.str();
}

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& body) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << ',';
      os << csv_field(row[c]);
    }
    os << '\n';
  };
  emit(header);
  for (const auto& r : body) emit(r);
  return os.str();
}

struct Juxtaposed {
  std::vector<std::string> groups;   // network name above each column
  std::vector<std::string> columns;  // metric name per column
  std::vector<std::vector<std::string>> body;
};

Juxtaposed juxtapose(std::span<const NamedMetrics> networks, MetricColumns columns) {
  if (networks.empty()) throw Error(ErrorCode::EmptyInput, "no networks to tabulate");
  const auto names = selected_names(columns);

  std::set<NodeLabel> all;
  std::vector<std::map<NodeLabel, const NodeMetricsRow*>> by_label(networks.size());
  for (std::size_t k = 0; k < networks.size(); ++k) {
    for (const NodeMetricsRow& row : networks[k].rows) {
      all.insert(row.label);
      by_label[k].emplace(row.label, &row);
    }
  }
  if (all.empty()) throw Error(ErrorCode::EmptyInput, "no rows to tabulate");

  Juxtaposed out;
  out.groups.emplace_back("");
  out.columns.emplace_back("label");
  for (const NamedMetrics& net : networks) {
    for (const std::string& n : names) {
      out.groups.push_back(net.name);
      out.columns.push_back(n);
    }
  }
  for (const NodeLabel& label : all) {
    std::vector<std::string> line{label.str()};
    for (std::size_t k = 0; k < networks.size(); ++k) {
      auto it = by_label[k].find(label);
      if (it == by_label[k].end()) {
        line.insert(line.end(), names.size(), "--");
      } else {
        auto c = cells(*it->second, columns);
        line.insert(line.end(), c.begin(), c.end());
      }
    }
    out.body.push_back(std::move(line));
  }
  return out;
}

}  // namespace

std::string to_dot(const WeightedNetwork& net, const RenderOptions& opts) {
  if (!(opts.min_penwidth > 0.0) || !(opts.penwidth_per_weight > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "penwidth parameters must be positive");
  }
  std::ostringstream os;
  os << "graph netdiff {\n";
  os << "  graph [layout=" << quoted(opts.layout_hint) << ", overlap=false];\n";
  os << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < net.size(); ++i) {
    os << "  " << quoted(net.label(i).str());
    if (opts.color_by_partition) {
      const auto& assignment = opts.color_by_partition->assignment();
      auto it = assignment.find(net.label(i));
      if (it != assignment.end()) {
        os << " [style=filled, fillcolor="
           << quoted(kCommunityPalette[it->second % kCommunityPalette.size()])
           << ", community=" << it->second << "]";
      }
    }
    os << ";\n";
  }
  for (const EdgeRecord& e : edge_records(net)) {
    const double pen = opts.min_penwidth + opts.penwidth_per_weight * e.weight;
    os << "  " << quoted(e.source.str()) << " -- " << quoted(e.target.str())
       << " [penwidth=" << format_shortest(pen) << ", tooltip=" << quoted(format_shortest(e.weight))
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string metrics_table(std::span<const NodeMetricsRow> rows, MetricColumns columns) {
  if (rows.empty()) throw Error(ErrorCode::EmptyInput, "no rows to tabulate");
  std::vector<std::string> header{"label"};
  for (auto& n : selected_names(columns)) header.push_back(n);
  std::vector<std::vector<std::string>> body;
  for (const NodeMetricsRow& row : rows) {
    std::vector<std::string> line{row.label.str()};
    for (auto& c : cells(row, columns)) line.push_back(std::move(c));
    body.push_back(std::move(line));
  }
  return aligned({header}, body);
}

std::string metrics_csv(std::span<const NodeMetricsRow> rows, MetricColumns columns) {
  if (rows.empty()) throw Error(ErrorCode::EmptyInput, "no rows to tabulate");
  std::vector<std::string> header{"label"};
  for (auto& n : selected_names(columns)) header.push_back(n);
  std::vector<std::vector<std::string>> body;
  for (const NodeMetricsRow& row : rows) {
    std::vector<std::string> line{row.label.str()};
    for (auto& c : cells(row, columns)) line.push_back(std::move(c));
    body.push_back(std::move(line));
  }
  return csv(header, body);
}

std::string juxtaposed_table(std::span<const NamedMetrics> networks, MetricColumns columns) {
  const Juxtaposed j = juxtapose(networks, columns);
  std::vector<std::string> groups = j.groups;
  for (std::size_t c = groups.size(); c-- > 1;) {
    if (groups[c] == groups[c - 1]) groups[c].clear();
  }
  return aligned({groups, j.columns}, j.body);
}

std::string juxtaposed_csv(std::span<const NamedMetrics> networks, MetricColumns columns) {
  const Juxtaposed j = juxtapose(networks, columns);
  std::vector<std::string> header{"label"};
  for (std::size_t c = 1; c < j.columns.size(); ++c) {
    header.push_back(j.groups[c] + ":" + j.columns[c]);
  }
  return csv(header, j.body);
}

}  // namespace netdiff
