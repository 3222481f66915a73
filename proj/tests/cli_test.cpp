#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "proxyvote/bench/sweep.hpp"
#include "proxyvote/cli.hpp"
#include "proxyvote/profile_json.hpp"

using namespace proxyvote;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("proxyvote_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string forge(std::vector<std::string> args, const std::string& name) {
    args.insert(args.begin(), "forge");
    args.push_back("-o");
    args.push_back(path(name));
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return path(name);
  }

  fs::path dir_;
};

const fs::path kMini = fs::path(PROXYVOTE_SOURCE_DIR) / "data" / "mini";

}  // namespace

TEST_F(CliTest, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("elect"), std::string::npos);
  EXPECT_NE(r.out.find("sweep"), std::string::npos);
}

TEST_F(CliTest, ForgeWritesLoadableProfile) {
  const auto file = forge({"attraction-gap", "--n", "5"}, "gap.json");
  const auto p = read_profile(file);
  EXPECT_EQ(p.n(), 5u);
  EXPECT_EQ(p.m, 4u);
  const auto r = run({"validate", "--profile", file});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ok: 5 voters, 4 proposals\n");
}

TEST_F(CliTest, ForgeToStdout) {
  const auto r = run({"forge", "16-lower"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_profile(r.out).n(), 8u);
}

TEST_F(CliTest, ElectMajorityPair) {
  const auto file = forge({"attraction-gap", "--n", "5"}, "gap.json");
  const auto r = run({"elect", "--profile", file, "--drep", "majority-pair"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("dreps: 2\n  0000\n  1111\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("delegated: 5/5\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("winner: I1 (index 0)\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("ratio: 1\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, ElectAdversarialTie) {
  const auto file = forge({"adversarial-tie", "--n", "3", "--m", "2"}, "tie.json");
  const auto best = run({"elect", "--profile", file, "--drep", "none"});
  ASSERT_EQ(best.code, 0) << best.err;
  EXPECT_NE(best.out.find("winner: I1"), std::string::npos) << best.out;
  const auto worst =
      run({"elect", "--profile", file, "--drep", "none", "--tiebreak", "adversarial"});
  ASSERT_EQ(worst.code, 0) << worst.err;
  EXPECT_NE(worst.out.find("winner: I2"), std::string::npos) << worst.out;
  EXPECT_NE(worst.out.find("ratio: inf"), std::string::npos) << worst.out;
}

TEST_F(CliTest, OracleSixteenLower) {
  const auto file = forge({"16-lower"}, "lower.json");
  const auto cert = path("cert.json");
  const auto r = run({"oracle", "--profile", file, "--lambda", "1", "-o", cert});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("best ratio: 8/5\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("opt: 8\n"), std::string::npos) << r.out;
  EXPECT_TRUE(fs::exists(cert));
}

TEST_F(CliTest, OracleBudgetIsAnError) {
  const auto file = forge({"16-lower"}, "lower.json");
  const auto r = run({"oracle", "--profile", file, "--lambda", "3", "--budget", "10"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST_F(CliTest, AnalyzeOmega) {
  const auto file = forge({"omega-n", "--m", "9", "--k", "1"}, "omega.json");
  const auto r = run({"analyze", "--profile", file, "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"gamma_exact\": 4"), std::string::npos) << r.out;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({"elect", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"forge", "no-such-generator"}).code, kExitUsage);
  EXPECT_EQ(run({"forge", "attraction-gap"}).code, kExitUsage);
}

TEST_F(CliTest, LibraryErrors) {
  EXPECT_EQ(run({"validate", "--profile", path("missing.json")}).code, kExitError);
  std::ofstream(path("bad.json")) << R"({"m": 2, "voters": [{"id": 1, "intrinsic": "10", "revealed": "0-"}]})";
  const auto r = run({"validate", "--profile", path("bad.json")});
  EXPECT_EQ(r.code, kExitError);
  const auto file = forge({"16-lower"}, "lower.json");
  EXPECT_EQ(run({"elect", "--profile", file, "--drep", "warp-drive"}).code, kExitError);
}

TEST_F(CliTest, SweepOnMiniDataset) {
  const auto out = path("sweep.csv");
  const std::vector<std::string> args = {
      "sweep", "--ratings", (kMini / "ratings.csv").string(), "--genome",
      (kMini / "genome-scores.csv").string(), "--movies", (kMini / "movies.csv").string(),
      "--lambda-max", "2", "--reps", "2", "--seed", "4", "-o", out};
  const auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(out);
  const auto rows = bench::read_sweep_csv(in);
  // 5 k-grid cells plus 3 new reveal cells, 2 reps, lambda 0..2
  EXPECT_EQ(rows.size(), 8u * 2u * 3u);
}

TEST_F(CliTest, SweepUsesDataDirEnvironment) {
  const auto config = path("config.json");
  std::ofstream(config) << R"({"lambda_max": 1, "repetitions": 1, "k_ratio_grid": [0.0],
                              "reveal_ratio_grid": [0.4], "fixed_k_ratio": 0.0})";
  ::setenv(kDataDirEnv, kMini.string().c_str(), 1);
  const auto r = run({"sweep", "--config", config});
  ::unsetenv(kDataDirEnv);
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  EXPECT_EQ(bench::read_sweep_csv(in).size(), 2u);
}
