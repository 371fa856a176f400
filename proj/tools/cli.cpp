#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "netdiff/cluster.hpp"
#include "netdiff/compare.hpp"
#include "netdiff/error.hpp"
#include "netdiff/format.hpp"
#include "netdiff/ingest.hpp"
#include "netdiff/io.hpp"
#include "netdiff/metrics.hpp"
#include "netdiff/network.hpp"
#include "netdiff/render.hpp"

namespace netdiff::cli {
namespace {

namespace fs = std::filesystem;

struct Config {
  std::vector<std::string> edges;
  std::string a, b;
  std::string profiles, aliases, nodes, attrs, attribute, clusters, out, counts;
  std::vector<std::string> remove;
  double resolution = 1.0;
  unsigned threads = 0;
  bool json = false;
  bool table = false;
};

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  file << content;
  if (!file) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

// "dir/edges.csv" -> "dir/edges.<tag>.csv"
std::string sidecar(const std::string& path, const std::string& tag) {
  fs::path p(path);
  return (p.parent_path() / (p.stem().string() + "." + tag + ".csv")).string();
}

std::optional<NodeFile> load_nodes(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::istringstream in(read_file(path));
  return read_node_file(in);
}

WeightedNetwork load_network(const std::string& edges_path, const std::string& nodes_path) {
  std::istringstream in(read_file(edges_path));
  const std::vector<EdgeRecord> records = read_edge_list(in);
  std::vector<NodeLabel> extra;
  if (auto nodes = load_nodes(nodes_path)) extra = nodes->labels;
  return from_edge_list(records, extra);
}

std::string edge_list_text(const WeightedNetwork& net) {
  std::ostringstream os;
  write_edge_list(os, net);
  return os.str();
}

std::string node_file_text(const WeightedNetwork& net) {
  std::ostringstream os;
  write_node_file(os, net.labels());
  return os.str();
}

void run_ingest(const Config& cfg, std::ostream& out) {
  const ProfileCorpus corpus = load_corpus(cfg.profiles);
  AliasTable aliases;
  if (!cfg.aliases.empty()) aliases = parse_alias_json(read_file(cfg.aliases));

  std::vector<NodeLabel> external;
  if (auto nodes = load_nodes(cfg.nodes)) {
    for (const NodeLabel& l : nodes->labels) {
      if (!corpus.profiles.contains(l)) external.push_back(l);
    }
  }
  const MentionCounts counts = count_mentions(corpus, aliases, external);

  std::vector<NodeLabel> universe = external;
  for (const auto& [label, text] : corpus.profiles) universe.push_back(label);
  const WeightedNetwork net = symmetrize(counts, universe);

  write_output(cfg.out, edge_list_text(net), out);

  std::string counts_path = cfg.counts;
  if (counts_path.empty() && !cfg.out.empty()) counts_path = sidecar(cfg.out, "counts");
  if (!counts_path.empty()) {
    std::ostringstream os;
    write_mention_counts(os, counts);
    write_output(counts_path, os.str(), out);
  }
  if (!cfg.out.empty()) write_output(sidecar(cfg.out, "nodes"), node_file_text(net), out);
}

void run_metrics(const Config& cfg, std::ostream& out) {
  const ParallelOptions par{cfg.threads};
  if (cfg.edges.size() == 1) {
    const WeightedNetwork net = load_network(cfg.edges.front(), cfg.nodes);
    const auto rows = metrics_all(net, par);
    write_output(cfg.out, cfg.table ? metrics_table(rows) : metrics_csv(rows), out);
    return;
  }
  std::vector<NamedMetrics> named;
  for (const std::string& path : cfg.edges) {
    const WeightedNetwork net = load_network(path, {});
    named.push_back({fs::path(path).stem().string(), metrics_all(net, par)});
  }
  write_output(cfg.out, cfg.table ? juxtaposed_table(named) : juxtaposed_csv(named), out);
}

void run_compare(const Config& cfg, std::ostream& out) {
  const WeightedNetwork a = load_network(cfg.a, {});
  const WeightedNetwork b = load_network(cfg.b, {});
  const ComparisonReport report = compare(a, b);
  if (cfg.json) {
    write_output(cfg.out, comparison_json(report), out);
    return;
  }
  auto join = [](const std::vector<NodeLabel>& labels) {
    std::string s;
    for (const NodeLabel& l : labels) s += (s.empty() ? "" : ", ") + l.str();
    return s.empty() ? std::string("-") : s;
  };
  std::ostringstream os;
  os << "metric     value\n";
  os << "ndc        " << format_fixed(report.ndc, 3) << '\n';
  os << "nsc        " << format_fixed(report.nsc, 3) << '\n';
  os << "eej        " << format_fixed(report.eej, 3) << '\n';
  os << "density_a  " << format_fixed(report.density_a, 3) << '\n';
  os << "density_b  " << format_fixed(report.density_b, 3) << '\n';
  os << "only_in_a  " << join(report.only_in_a) << '\n';
  os << "only_in_b  " << join(report.only_in_b) << '\n';
  write_output(cfg.out, os.str(), out);
}

void run_cluster(const Config& cfg, std::ostream& out) {
  const WeightedNetwork net = load_network(cfg.edges.front(), cfg.nodes);
  const Partition p = louvain(net, LouvainOptions{cfg.resolution});
  if (cfg.attribute.empty()) {
    write_output(cfg.out, partition_json(p), out);
    return;
  }
  const std::string& attrs_path = cfg.attrs.empty() ? cfg.nodes : cfg.attrs;
  if (attrs_path.empty()) {
    throw Error(ErrorCode::UnknownAttribute, "--attribute needs --attrs or --nodes");
  }
  const auto attrs = load_nodes(attrs_path);
  const auto composition = cluster_composition(p, attrs->attributes, cfg.attribute);
  write_output(cfg.out, partition_json(p, &composition, cfg.attribute), out);
}

void run_ablate(const Config& cfg, std::ostream& out) {
  WeightedNetwork net = load_network(cfg.edges.front(), cfg.nodes);
  for (const std::string& label : cfg.remove) net = remove_node(net, NodeLabel(label));
  write_output(cfg.out, edge_list_text(net), out);
  if (!cfg.out.empty()) write_output(sidecar(cfg.out, "nodes"), node_file_text(net), out);
}

void run_render(const Config& cfg, std::ostream& out) {
  const WeightedNetwork net = load_network(cfg.edges.front(), cfg.nodes);
  RenderOptions opts;
  if (!cfg.clusters.empty()) opts.color_by_partition = parse_partition_json(read_file(cfg.clusters));
  write_output(cfg.out, to_dot(net, opts), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted network construction, metrics, comparison and clustering", "netdiff"};
  app.require_subcommand(1);
  Config cfg;

  auto* ingest = app.add_subcommand("ingest", "Count mentions in profile texts into an edge list");
  ingest->add_option("--profiles", cfg.profiles, "Directory of <label>.txt profiles")
      ->required()
      ->check(CLI::ExistingDirectory);
  ingest->add_option("--aliases", cfg.aliases, "JSON map of label to alias list")
      ->check(CLI::ExistingFile);
  ingest->add_option("--nodes", cfg.nodes, "Node CSV; labels without profiles are mentionable")
      ->check(CLI::ExistingFile);
  ingest->add_option("--out", cfg.out, "Edge-list CSV (stdout if omitted)");
  ingest->add_option("--counts", cfg.counts, "Directed counts CSV (default <out>.counts.csv)");

  auto* metrics = app.add_subcommand("metrics", "Per-node degree, strength and centralities");
  metrics->add_option("--edges", cfg.edges, "Edge-list CSV; repeat to juxtapose networks")
      ->required()
      ->check(CLI::ExistingFile);
  metrics->add_option("--nodes", cfg.nodes, "Node CSV adding isolated nodes")
      ->check(CLI::ExistingFile);
  metrics->add_option("--out", cfg.out, "Output path (stdout if omitted)");
  metrics->add_flag("--table", cfg.table, "Aligned text table instead of CSV");
  metrics->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores");

  auto* cmp = app.add_subcommand("compare", "NDC, NSC, EEJ and densities of two networks");
  cmp->add_option("--a", cfg.a, "First edge-list CSV")->required()->check(CLI::ExistingFile);
  cmp->add_option("--b", cfg.b, "Second edge-list CSV")->required()->check(CLI::ExistingFile);
  cmp->add_flag("--json", cfg.json, "Emit the report as JSON");
  cmp->add_option("--out", cfg.out, "Output path (stdout if omitted)");

  auto* cluster = app.add_subcommand("cluster", "Louvain communities");
  cluster->add_option("--edges", cfg.edges, "Edge-list CSV")
      ->required()
      ->expected(1)
      ->check(CLI::ExistingFile);
  cluster->add_option("--nodes", cfg.nodes, "Node CSV adding isolated nodes")
      ->check(CLI::ExistingFile);
  cluster->add_option("--resolution", cfg.resolution, "Modularity resolution")
      ->check(CLI::PositiveNumber);
  cluster->add_option("--attrs", cfg.attrs, "Node CSV with attribute columns")
      ->check(CLI::ExistingFile);
  cluster->add_option("--attribute", cfg.attribute, "Attribute to count per community");
  cluster->add_option("--out", cfg.out, "Partition JSON path (stdout if omitted)");

  auto* ablate = app.add_subcommand("ablate", "Remove nodes and write the induced subnetwork");
  ablate->add_option("--edges", cfg.edges, "Edge-list CSV")
      ->required()
      ->expected(1)
      ->check(CLI::ExistingFile);
  ablate->add_option("--nodes", cfg.nodes, "Node CSV adding isolated nodes")
      ->check(CLI::ExistingFile);
  ablate->add_option("--remove", cfg.remove, "Label to remove (repeatable)")->required();
  ablate->add_option("--out", cfg.out, "Edge-list CSV (stdout if omitted)");

  auto* render = app.add_subcommand("render", "DOT diagram with weight-scaled edges");
  render->add_option("--edges", cfg.edges, "Edge-list CSV")
      ->required()
      ->expected(1)
      ->check(CLI::ExistingFile);
  render->add_option("--nodes", cfg.nodes, "Node CSV adding isolated nodes")
      ->check(CLI::ExistingFile);
  render->add_option("--clusters", cfg.clusters, "Partition JSON used to color nodes")
      ->check(CLI::ExistingFile);
  render->add_option("--out", cfg.out, "DOT path (stdout if omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (metrics->parsed() && cfg.edges.size() > 1 && !cfg.nodes.empty()) {
      throw CLI::ValidationError("--nodes", "cannot be combined with several --edges");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ingest->parsed()) run_ingest(cfg, out);
    else if (metrics->parsed()) run_metrics(cfg, out);
    else if (cmp->parsed()) run_compare(cfg, out);
    else if (cluster->parsed()) run_cluster(cfg, out);
    else if (ablate->parsed()) run_ablate(cfg, out);
    else if (render->parsed()) run_render(cfg, out);
  } catch (const Error& e) {
    err << e.name() << '\n' << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << to_string(ErrorCode::IoError) << '\n' << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace netdiff::cli
