#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "../support/dot_parser.hpp"
#include "netdiff/compare.hpp"
#include "netdiff/io.hpp"
#include "netdiff/metrics.hpp"
#include "netdiff/render.hpp"

namespace netdiff {
namespace {

namespace fs = std::filesystem;

const std::string kData = NETDIFF_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("netdiff-cli-" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path(name), std::ios::binary) << content;
    return path(name);
  }

  fs::path dir_;
};

const char* kEdges =
    "source,target,weight\n"
    "A,B,1\nA,C,2\nB,C,1\nC,D,4\nD,E,1\nC,E,1\n";

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"metrics"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"metrics", "--edges", path("missing.csv")}).code, cli::kExitUsage);
  const std::string e = write("e.csv", kEdges);
  EXPECT_EQ(run({"metrics", "--edges", e, "--frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"cluster", "--edges", e, "--resolution", "-1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"ablate", "--edges", e}).code, cli::kExitUsage);
  EXPECT_EQ(run({"metrics", "--edges", e, "--edges", e, "--nodes", e}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST_F(Cli, DomainErrorsExitOneWithName) {
  const std::string dup = write("dup.csv", "source,target,weight\nA,B,1\nB,A,2\n");
  Result r = run({"metrics", "--edges", dup});
  EXPECT_EQ(r.code, cli::kExitDomainError);
  EXPECT_EQ(r.err.rfind("DuplicatePair", 0), 0u) << r.err;

  const std::string e = write("e.csv", kEdges);
  r = run({"ablate", "--edges", e, "--remove", "Nobody"});
  EXPECT_EQ(r.code, cli::kExitDomainError);
  EXPECT_EQ(r.err.rfind("UnknownLabel", 0), 0u);

  const std::string empty = write("empty.csv", "source,target,weight\n");
  r = run({"compare", "--a", empty, "--b", empty});
  EXPECT_EQ(r.code, cli::kExitDomainError);
  EXPECT_EQ(r.err.rfind("InvalidNetwork", 0), 0u);  // no edges and no node file: no nodes

  r = run({"cluster", "--edges", e, "--attrs", write("n.csv", "label,x\nA,1\n"), "--attribute", "y"});
  EXPECT_EQ(r.code, cli::kExitDomainError);
  EXPECT_EQ(r.err.rfind("UnknownAttribute", 0), 0u);

  r = run({"metrics", "--edges", write("bad.csv", "source,target,weight\nA,B,x\n")});
  EXPECT_EQ(r.err.rfind("ParseError", 0), 0u);
}

TEST_F(Cli, IngestThenMetricsPipeline) {
  const std::string out = path("net.csv");
  Result r = run({"ingest", "--profiles", kData + "/corpus", "--aliases", kData + "/aliases.json",
                  "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(path("net.counts.csv")), read_file(kData + "/expected_counts.csv"));
  EXPECT_TRUE(fs::exists(path("net.nodes.csv")));

  r = run({"metrics", "--edges", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "label,degree,strength,closeness,betweenness");
  EXPECT_EQ(parse_csv(r.out).rows.size(), 5u);

  // External labels from a node file become nodes; Gorum is never mentioned.
  r = run({"ingest", "--profiles", kData + "/corpus", "--aliases", kData + "/aliases.json",
           "--nodes", kData + "/nodes.csv", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  r = run({"metrics", "--edges", out, "--nodes", path("net.nodes.csv"), "--table"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Gorum"), std::string::npos);
  EXPECT_NE(r.out.find("Arazni"), std::string::npos);
}

TEST_F(Cli, CompareJsonAndTable) {
  const std::string a = write("a.csv", kEdges);
  const std::string b = write("b.csv", "source,target,weight\nA,B,3\nB,C,1\nC,F,1\n");
  Result r = run({"compare", "--a", a, "--b", b, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  std::istringstream sa(kEdges), sb(read_file(b));
  const auto na = from_edge_list(read_edge_list(sa), {});
  const auto nb = from_edge_list(read_edge_list(sb), {});
  EXPECT_EQ(j["ndc"].get<double>(), ndc(na, nb));
  EXPECT_EQ(j["nsc"].get<double>(), nsc(na, nb));
  EXPECT_EQ(j["eej"].get<double>(), eej(na, nb));
  EXPECT_EQ(j["only_in_a"], nlohmann::json::parse(R"(["D","E"])"));
  EXPECT_EQ(j["only_in_b"], nlohmann::json::parse(R"(["F"])"));

  r = run({"compare", "--a", a, "--b", b});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("eej        0.286"), std::string::npos) << r.out;
}

TEST_F(Cli, AblateThenCompareAndMetrics) {
  const std::string e = write("e.csv", kEdges);
  const std::string sub = path("sub.csv");
  ASSERT_EQ(run({"ablate", "--edges", e, "--remove", "C", "--out", sub}).code, 0);
  Result r = run({"compare", "--a", e, "--b", sub, "--json"});
  ASSERT_EQ(r.code, 0);
  // C has degree 4 of 6 edges.
  EXPECT_EQ(nlohmann::json::parse(r.out)["eej"].get<double>(), 2.0 / 6.0);

  r = run({"metrics", "--edges", sub, "--nodes", path("sub.nodes.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(kEdges);
  const auto lib = remove_node(from_edge_list(read_edge_list(in), {}), NodeLabel("C"));
  EXPECT_EQ(r.out, metrics_csv(metrics_all(lib)));

  // Several removals in one call.
  r = run({"ablate", "--edges", e, "--remove", "C", "--remove", "A"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "source,target,weight\nD,E,1\n");
}

TEST_F(Cli, MetricsJuxtaposesSeveralNetworks) {
  const std::string full = write("full.csv", kEdges);
  const std::string sub = write("sub.csv", "source,target,weight\nA,B,1\nB,E,1\nA,E,2\n");
  Result r = run({"metrics", "--edges", full, "--edges", sub, "--table"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("full"), std::string::npos);
  EXPECT_NE(r.out.find("--"), std::string::npos);
  r = run({"metrics", "--edges", full, "--edges", sub});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "label,full:closeness,full:betweenness,sub:closeness,sub:betweenness");
}

TEST_F(Cli, ClusterAndRender) {
  const std::string e = write(
      "e.csv", "source,target,weight\na1,a2,1\na2,a3,1\na1,a3,1\nb1,b2,1\nb2,b3,1\nb1,b3,1\na3,b1,0.1\n");
  const std::string attrs = write("attrs.csv", "label,side\na1,left\na2,left\na3,\nb1,right\n");
  const std::string clusters = path("clusters.json");
  Result r = run({"cluster", "--edges", e, "--attrs", attrs, "--attribute", "side", "--out", clusters});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(read_file(clusters));
  EXPECT_EQ(j["communities"], nlohmann::json::parse(R"([["a1","a2","a3"],["b1","b2","b3"]])"));
  EXPECT_EQ(j["composition"]["counts"][0], nlohmann::json::parse(R"({"left":2,"unknown":1})"));
  EXPECT_EQ(j["composition"]["counts"][1], nlohmann::json::parse(R"({"right":1,"unknown":2})"));

  r = run({"render", "--edges", e, "--clusters", clusters});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto g = netdiff::testing::parse_dot(r.out);
  EXPECT_EQ(g.nodes.size(), 6u);
  EXPECT_EQ(g.edges.size(), 7u);
  EXPECT_EQ(g.node_attrs.at("a1").at("fillcolor"), std::string(kCommunityPalette[0]));
  EXPECT_EQ(g.node_attrs.at("b3").at("fillcolor"), std::string(kCommunityPalette[1]));
}

TEST_F(Cli, OutputsAreByteIdenticalAcrossRunsAndThreadCounts) {
  const std::string e = write("e.csv", kEdges);
  const std::string first = run({"metrics", "--edges", e, "--threads", "1"}).out;
  for (const char* threads : {"1", "2", "7", "0"}) {
    EXPECT_EQ(run({"metrics", "--edges", e, "--threads", threads}).out, first);
  }
  EXPECT_EQ(run({"cluster", "--edges", e}).out, run({"cluster", "--edges", e}).out);
  EXPECT_EQ(run({"render", "--edges", e}).out, run({"render", "--edges", e}).out);
}

}  // namespace
}  // namespace netdiff
