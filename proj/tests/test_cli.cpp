#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "looptx/cli.hpp"

namespace looptx::cli {
namespace {

const std::string kTheta =
    R"({"vertices":["v0","v1"],"edges":[{"id":"e1","from":"v0","to":"v1"},)"
    R"({"id":"e2","from":"v0","to":"v1"},{"id":"e3","from":"v0","to":"v1"}],"base":"v0"})";

struct Outcome {
  int code;
  Json report;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  Json report = out.str().empty() ? Json() : Json::parse(out.str());
  return {code, report, err.str()};
}

TEST(Cli, KernelTestOnCommutator) {
  auto r = invoke({"kernel-test", "--graph", kTheta, "--word",
                   R"({"kind":"loop","steps":["e2","~e1","e3","~e1","e1","~e2","e1","~e3"]})"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(r.report["pass"].get<bool>());
  EXPECT_EQ(r.report["results"][0]["value"], Json::array({0, 0}));
}

TEST(Cli, KernelTestOnGenerator) {
  auto r = invoke({"kernel-test", "--graph", kTheta, "--word", R"({"kind":"loop","steps":["e2","~e1"]})"});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_FALSE(r.report["pass"].get<bool>());
}

TEST(Cli, BochnerRejectsSignedDensity) {
  auto r = invoke({"bochner-check", "--poly",
                   R"({"dim":1,"hermitian":true,"coeffs":[{"k":[1],"re":1,"im":0},{"k":[-1],"re":1,"im":0}]})"});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NEAR(r.report["data"]["min_eigenvalue"].get<double>(), -1.0, 1e-9);
  EXPECT_NEAR(r.report["data"]["grid_minimum"].get<double>(), -2.0, 1e-9);
}

TEST(Cli, GeneratorsOnTheta) {
  auto r = invoke({"generators", "--graph", kTheta});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.report["data"]["rank"], 2);
  EXPECT_EQ(r.report["data"]["generators"][0]["steps"], Json::array({"e2", "~e1"}));
}

TEST(Cli, DecomposeOnTheta) {
  auto r = invoke({"decompose", "--graph", kTheta, "--word", R"({"kind":"loop","steps":["e2","~e3"]})"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.report["data"]["generators"], Json::array({"b1", "~b2"}));
}

TEST(Cli, TransformRoundTrip) {
  auto r = invoke({"transform", "--poly",
                   R"({"level":{"ambient":2,"basis":[[2,1]]},"poly":{"dim":1,"coeffs":[{"k":[1],"re":1,"im":0}]}})"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.report["data"]["loop_state"]["support"][0]["h"], Json::array({2, 1}));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(invoke({"generators"}).code, kExitUsage);
  EXPECT_EQ(invoke({"generators", "--graph", "{not json"}).code, kExitUsage);
  EXPECT_EQ(invoke({"generators", "--graph", R"({"vertices":["v0"],"edges":[],"base":"v9"})"}).code,
            kExitUsage);
}

TEST(Cli, ReportsAreDeterministic) {
  std::vector<std::string> args{"mandelstam-sweep", "--graph", kTheta, "--trials", "50", "--seed", "7"};
  Json a = invoke(args).report;
  Json b = invoke(args).report;
  a.erase("runtime_ms");
  b.erase("runtime_ms");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, FileInputAndCsvOutput) {
  auto dir = std::filesystem::temp_directory_path() / "looptx_cli_test";
  std::filesystem::create_directories(dir);
  auto graph = dir / "theta.json";
  std::ofstream(graph) << kTheta;
  auto csv = dir / "density.csv";
  auto r = invoke({"bochner-check", "--poly", R"({"dim":1,"coeffs":[{"k":[0],"re":1,"im":0}]})", "--grid", "9",
                   "--out", csv.string()});
  EXPECT_EQ(r.code, kExitPass);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "theta0,density");
  auto g = invoke({"generators", "--graph", graph.string()});
  EXPECT_EQ(g.code, kExitPass);
  std::filesystem::remove_all(dir);
}

TEST(Cli, DigestIsKeyOrderIndependent) {
  Json a = Json::parse(R"({"x":1,"y":[1,2]})");
  Json b = Json::parse(R"({"y":[1,2],"x":1})");
  EXPECT_EQ(digest(a), digest(b));
  EXPECT_EQ(digest(a).size(), 64u);
}

TEST(Cli, ManifestCoversEveryOperation) {
  EXPECT_EQ(manifest().size(), 15u);
  std::size_t ops = 0;
  for (const auto& entry : manifest()) ops += entry.operations.size();
  EXPECT_GT(ops, 40u);
}

}  // namespace
}  // namespace looptx::cli
