#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hyperflower/cli.hpp"

using namespace hyperflower;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperflower");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hyperflower_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"tile", "--no-such-flag"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"crochet", "--format", "yaml"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, DomainErrorLeavesNoFile) {
  const auto out = path("tile.svg");
  const auto r = run({"tile", "--k", "5", "--layers", "2", "--out", out});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_FALSE(r.err.empty());
  EXPECT_FALSE(fs::exists(out));
  EXPECT_EQ(run({"crochet", "--k", "6"}).code, kExitDomain);
  EXPECT_EQ(run({"cylinder", "--b1", "0,0,1", "--b2", "1,0,0"}).code, kExitDomain);
}

TEST_F(CliTest, BudgetExceeded) {
  const auto out = path("mesh.json");
  EXPECT_EQ(run({"mesh", "--k", "7", "--layers", "6", "--budget", "50", "--out", out}).code, kExitBudget);
  EXPECT_FALSE(fs::exists(out));
  EXPECT_EQ(run({"tile", "--k", "7", "--layers", "6", "--budget", "50"}).code, kExitBudget);
}

TEST_F(CliTest, UnwritableOutput) {
  EXPECT_EQ(run({"growth", "--out", path("missing/dir/g.csv")}).code, kExitUsage);
}

TEST_F(CliTest, GrowthToStdout) {
  const auto r = run({"growth", "--r-max", "2", "--steps", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("r,c_euclidean,c_hyperbolic,ratio\n0,0,0,1\n1,", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
}

TEST_F(CliTest, MeshStats) {
  const auto r = run({"mesh", "--k", "7", "--layers", "4"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["vertices"], 71);
  EXPECT_EQ(j["edges"], 154);
  EXPECT_EQ(j["faces"], 84);
}

TEST_F(CliTest, EmbedWritesObjAndReport) {
  const auto obj = path("disk.obj");
  const auto report = path("disk.json");
  const auto r = run({"embed", "--k", "7", "--layers", "1", "--seed", "3", "--out", obj, "--report", report});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto text = slurp(obj);
  EXPECT_EQ(std::count(text.begin(), text.end(), 'v'), 15);
  const auto j = nlohmann::json::parse(slurp(report));
  EXPECT_TRUE(j["converged"].get<bool>());
}

TEST_F(CliTest, CylinderOutputs) {
  const auto obj = path("cyl.obj");
  const auto profile = path("profile.csv");
  const auto neck = path("neck.json");
  const auto r = run({"cylinder", "--t-samples", "6", "--theta-samples", "8", "--out", obj, "--profile", profile,
                      "--profile-samples", "5", "--neck", neck});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(profile).rfind("t,distance_to_axis\n", 0), 0u);
  const auto j = nlohmann::json::parse(slurp(neck));
  EXPECT_NEAR(j["height"].get<double>(), 0.0, 1e-9);
  EXPECT_NEAR(j["hyperbolic_radius"].get<double>(), std::atanh(0.8), 1e-12);
}

TEST_F(CliTest, CrochetFormats) {
  const auto text = run({"crochet", "--k", "7", "--rows", "2"});
  ASSERT_EQ(text.code, kExitOk);
  EXPECT_NE(text.out.find("three chain stitches for rising"), std::string::npos);
  const auto literal = run({"crochet", "--rows", "2", "--literal"});
  EXPECT_EQ(literal.out, text.out);
  const auto json = run({"crochet", "--k", "7", "--rows", "2", "--format", "json"});
  ASSERT_EQ(json.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(json.out)["counts"]["total"], 134);
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands{
      {"tile", "--k", "7", "--layers", "3", "--model", "poincare"},
      {"mesh", "--k", "8", "--layers", "2"},
      {"growth", "--r-max", "4", "--steps", "9"},
      {"embed", "--k", "7", "--layers", "1", "--seed", "5"},
      {"cylinder", "--source", "mesh", "--rows", "1", "--max-iterations", "200"},
      {"crochet", "--k", "7", "--rows", "3", "--format", "json"},
  };
  for (const auto& cmd : commands) {
    auto a = cmd;
    auto b = cmd;
    a.insert(a.end(), {"--out", path("a")});
    b.insert(b.end(), {"--out", path("b")});
    ASSERT_EQ(run(a).code, kExitOk) << cmd.front();
    ASSERT_EQ(run(b).code, kExitOk) << cmd.front();
    EXPECT_EQ(slurp(path("a")), slurp(path("b"))) << cmd.front();
    EXPECT_FALSE(slurp(path("a")).empty());
  }
}
