#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace gelfand;
using io::Json;

namespace {

std::string data(const std::string& name) { return std::string(GELFAND_DATA_DIR) + "/" + name; }

struct Run {
  int exit;
  std::string out, err;
  Json report;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.exit = cli::run(args, out, err, &r.report);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST(Cli, ExitCodes) {
  auto fails = run({"check", "gelfand", data("f5_nonresidue.json")});
  EXPECT_EQ(fails.exit, 1);
  EXPECT_EQ(fails.report["reason"]["message"], "0 characters, dim A/Jrad = 2");

  auto iso = run({"characterize", data("f5_scrambled.json")});
  EXPECT_EQ(iso.exit, 0);
  EXPECT_EQ(iso.report["results"]["isomorphism"].size(), 2u);

  auto bad = run({"validate", data("not_associative.json")});
  EXPECT_EQ(bad.exit, 2);
  EXPECT_EQ(bad.report["reason"]["code"], "NotAssociative");
  EXPECT_NE(bad.report["reason"]["message"].get<std::string>().find("(1, 1, 2)"), std::string::npos);

  auto deep = run({"vdp-approx", data("z3_tower.json"), "--field", "Qp:3:8", "--k", "3"});
  EXPECT_EQ(deep.exit, 3);
  EXPECT_EQ(deep.report["reason"]["code"], "DepthExceeded");

  auto budget = run({"max-spec", data("q_split.json"), "--budget", "2"});
  EXPECT_EQ(budget.exit, 3);
  EXPECT_EQ(budget.report["reason"]["code"], "SearchBudgetExceeded");

  EXPECT_EQ(run({"validate", "/nonexistent.json"}).exit, 2);
  EXPECT_EQ(run({"frobnicate"}).exit, 2);
  EXPECT_EQ(run({"check", "compactness", data("q_split.json")}).exit, 2);
  EXPECT_EQ(run({"--help"}).exit, 0);
  EXPECT_EQ(run({"duality-roundtrip", data("duplicate_points.json")}).exit, 2);
  EXPECT_EQ(run({"vdp-approx", data("bad_tower.json"), "--field", "Qp:3:8"}).exit, 2);
  EXPECT_EQ(run({"gelfand-map", data("f5_nonresidue.json")}).exit, 1);
  EXPECT_EQ(run({"check", "semisimple", data("q3_local.json")}).exit, 1);
  EXPECT_EQ(run({"check", "pm", data("q3_local.json")}).exit, 0);
}

TEST(Cli, ReportShape) {
  auto r = run({"report", data("q3_local.json")});
  ASSERT_EQ(r.exit, 0);
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.report.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"tool", "version", "command", "input_digest", "exit_code", "reason",
                                            "results", "justifications", "timings"}));
  EXPECT_EQ(r.report["input_digest"].get<std::string>().rfind("sha256:", 0), 0u);
  EXPECT_EQ(r.report["results"]["properties"]["gelfand"], true);
  EXPECT_EQ(r.report["results"]["properties"]["semisimple"], false);
  EXPECT_FALSE(r.report["justifications"].empty());
}

TEST(Cli, ReportFileAndSummary) {
  auto path = (std::filesystem::temp_directory_path() / "gelfand_cli_test_report.json").string();
  auto r = run({"spectrum", data("q_split.json"), "--element", "0,1,0", "--report", path});
  ASSERT_EQ(r.exit, 0);
  EXPECT_EQ(r.out, "spectrum: {-1, 0, 1}\n");
  std::ifstream in(path);
  Json file = Json::parse(in);
  EXPECT_EQ(cli::payload(file), cli::payload(r.report));
  EXPECT_EQ(file["results"]["spectral_radius"], "1");
}

TEST(Cli, Commands) {
  auto ortho = run({"orthogonalize", data("q_split.json"), "--term", "2:1,0,0", "--term", "3:0,1/2,1/2"});
  ASSERT_EQ(ortho.exit, 0);
  EXPECT_EQ(ortho.report["results"]["reproduces_input"], true);
  EXPECT_EQ(ortho.report["results"]["pairwise_orthogonal"], true);

  auto idem = run({"idempotents", data("q_split.json"), "--closure"});
  ASSERT_EQ(idem.exit, 0);
  EXPECT_EQ(idem.report["results"]["atoms"].size(), 3u);
  EXPECT_EQ(idem.report["results"]["boolean_algebra"].size(), 8u);

  auto space = run({"duality-roundtrip", data("three_points.json"), "--field", "Fp:3"});
  ASSERT_EQ(space.exit, 0);
  EXPECT_EQ(space.report["results"]["transform"].size(), 3u);
  EXPECT_EQ(space.report["results"]["triangle_space"], true);

  auto vdp = run({"vdp-approx", data("z3_tower.json"), "--field", "Qp:3:8", "--oracle", "poly:1,0,1", "--k", "2"});
  ASSERT_EQ(vdp.exit, 0);
  EXPECT_EQ(vdp.report["results"]["level"], 2);
  EXPECT_EQ(vdp.report["results"]["within_neighborhood"], true);

  auto topo = run({"check", "topologies", data("q_split.json")});
  EXPECT_EQ(topo.exit, 0);
  auto haus = run({"check", "hausdorff", data("q_dual_numbers.json")});
  EXPECT_EQ(haus.exit, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"validate", data("f5_scrambled.json")},
      {"spectrum", data("q_split.json"), "--element", "1,2,3"},
      {"max-spec", data("q3_local.json")},
      {"check", "gelfand", data("f5_nonresidue.json")},
      {"check", "topologies", data("q_split.json")},
      {"idempotents", data("q_split.json"), "--closure"},
      {"orthogonalize", data("q_split.json"), "--term", "2:1,0,0"},
      {"gelfand-map", data("q_dual_numbers.json")},
      {"characterize", data("f5_scrambled.json")},
      {"duality-roundtrip", data("three_points.json"), "--field", "Qp:3:6"},
      {"vdp-approx", data("z3_tower.json"), "--field", "Qp:3:8", "--k", "1"},
      {"report", data("q3_local.json")},
      {"validate", data("not_associative.json")},
  };
  for (const auto& args : commands) {
    auto a = run(args);
    auto b = run(args);
    EXPECT_EQ(cli::payload(a.report), cli::payload(b.report)) << args.front();
    EXPECT_EQ(a.out, b.out);
  }
}
