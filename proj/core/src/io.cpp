#include "netdiff/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "netdiff/error.hpp"
#include "netdiff/format.hpp"

namespace netdiff {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::size_t column(const CsvTable& t, std::string_view name) {
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    if (t.header[c] == name) return c;
  }
  throw Error(ErrorCode::ParseError, "missing column '" + std::string(name) + "'");
}

double parse_weight(const std::string& text, std::size_t line) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first != last && *first == ' ') ++first;
  while (last != first && last[-1] == ' ') --last;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw Error(ErrorCode::ParseError,
                "row " + std::to_string(line) + ": weight '" + text + "' is not a number");
  }
  return value;
}

ordered_json label_array(const std::vector<NodeLabel>& labels) {
  ordered_json out = ordered_json::array();
  for (const NodeLabel& l : labels) out.push_back(l.str());
  return out;
}

}  // namespace

CsvTable parse_csv(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t i = 0;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    // Blank lines are skipped.
    if (!(record.size() == 1 && record.front().empty())) records.push_back(std::move(record));
    record.clear();
  };

  while (i < text.size()) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      if (field_started && !field.empty()) {
        throw Error(ErrorCode::ParseError, "stray quote inside unquoted field");
      }
      in_quotes = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n' || c == '\r') {
      end_record();
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      field.push_back(c);
      field_started = true;
    }
    ++i;
  }
  if (in_quotes) throw Error(ErrorCode::ParseError, "unterminated quoted field");
  if (field_started || !field.empty() || !record.empty()) end_record();

  if (records.empty()) throw Error(ErrorCode::ParseError, "missing header row");
  CsvTable table;
  table.header = std::move(records.front());
  for (std::string& h : table.header) {
    while (!h.empty() && h.back() == ' ') h.pop_back();
    while (!h.empty() && h.front() == ' ') h.erase(0, 1);
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size()) {
      throw Error(ErrorCode::ParseError, "row " + std::to_string(r) + " has " +
                                             std::to_string(records[r].size()) +
                                             " fields, header has " +
                                             std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(records[r]));
  }
  return table;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<EdgeRecord> read_edge_list(std::istream& in) {
  const CsvTable t = parse_csv(slurp(in));
  const std::size_t src = column(t, "source");
  const std::size_t dst = column(t, "target");
  const std::size_t wgt = column(t, "weight");
  std::vector<EdgeRecord> records;
  records.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    records.push_back({NodeLabel(row[src]), NodeLabel(row[dst]), parse_weight(row[wgt], r + 1)});
  }
  return records;
}

void write_edge_list(std::ostream& out, const WeightedNetwork& net) {
  out << "source,target,weight\n";
  for (const EdgeRecord& r : edge_records(net)) {
    out << csv_field(r.source.str()) << ',' << csv_field(r.target.str()) << ','
        << format_shortest(r.weight) << '\n';
  }
}

NodeFile read_node_file(std::istream& in) {
  const CsvTable t = parse_csv(slurp(in));
  const std::size_t label_col = column(t, "label");
  NodeFile file;
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    if (c != label_col) file.attribute_names.push_back(t.header[c]);
  }
  for (const auto& row : t.rows) {
    NodeLabel label(row[label_col]);
    for (std::size_t c = 0; c < t.header.size(); ++c) {
      if (c == label_col) continue;
      std::string value = row[c];
      while (!value.empty() && value.back() == ' ') value.pop_back();
      while (!value.empty() && value.front() == ' ') value.erase(0, 1);
      file.attributes.set(label, t.header[c], std::move(value));
    }
    file.labels.push_back(std::move(label));
  }
  return file;
}

void write_node_file(std::ostream& out, std::span<const NodeLabel> labels) {
  out << "label\n";
  for (const NodeLabel& l : labels) out << csv_field(l.str()) << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  return slurp(in);
}

std::string comparison_json(const ComparisonReport& report) {
  ordered_json j;
  j["ndc"] = report.ndc;
  j["nsc"] = report.nsc;
  j["eej"] = report.eej;
  j["density_a"] = report.density_a;
  j["density_b"] = report.density_b;
  j["only_in_a"] = label_array(report.only_in_a);
  j["only_in_b"] = label_array(report.only_in_b);
  return j.dump(2) + "\n";
}

std::string partition_json(const Partition& p,
                           const std::vector<std::map<std::string, std::size_t>>* composition,
                           const std::string& attribute) {
  const auto ordered = p.ordered_communities();
  ordered_json j;
  j["communities"] = ordered_json::array();
  for (const auto& members : ordered) j["communities"].push_back(label_array(members));
  j["modularity"] = p.modularity();
  if (composition != nullptr) {
    ordered_json counts = ordered_json::array();
    for (const auto& members : ordered) {
      ordered_json histogram = ordered_json::object();
      for (const auto& [value, n] : (*composition)[p.assignment().at(members.front())]) {
        histogram[value] = n;
      }
      counts.push_back(std::move(histogram));
    }
    j["composition"] = {{"attribute", attribute}, {"counts", std::move(counts)}};
  }
  return j.dump(2) + "\n";
}

Partition parse_partition_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("partition JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("communities") || !j["communities"].is_array()) {
    throw Error(ErrorCode::ParseError, "partition JSON needs a 'communities' array");
  }
  std::map<NodeLabel, std::size_t> assignment;
  std::size_t id = 0;
  for (const auto& community : j["communities"]) {
    if (!community.is_array()) throw Error(ErrorCode::ParseError, "community is not an array");
    for (const auto& member : community) {
      if (!member.is_string()) throw Error(ErrorCode::ParseError, "label is not a string");
      if (!assignment.emplace(NodeLabel(member.get<std::string>()), id).second) {
        throw Error(ErrorCode::ParseError, "'" + member.get<std::string>() + "' listed twice");
      }
    }
    ++id;
  }
  double q = 0.0;
  if (j.contains("modularity") && j["modularity"].is_number()) q = j["modularity"].get<double>();
  return Partition(assignment, q);
}

}  // namespace netdiff
