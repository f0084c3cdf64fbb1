#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "illposed_app/run.hpp"

using namespace illposed::app;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("illposed_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int invoke(RunConfig cfg, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = run(cfg, o, e);
  if (out) *out = o.str();
  return code;
}

}  // namespace

TEST(Cli, FigureTwoPasses) {
  RunConfig cfg;
  cfg.command = "figures";
  cfg.figure_id = 2;
  cfg.out_dir = scratch("fig2");
  std::string out;
  EXPECT_EQ(invoke(cfg, &out), kExitPass);
  const auto j = nlohmann::json::parse(out);
  EXPECT_EQ(j["schema"], "illposed/1");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_GT(j["computed_ratio"].get<double>(), 1e-8 / 30);
  EXPECT_TRUE(fs::exists(cfg.out_dir / "figure2.json"));
}

TEST(Cli, FailingFigureExitsWithCheckFailure) {
  RunConfig cfg;
  cfg.command = "figures";
  cfg.figure_id = 1;
  cfg.out_dir = scratch("fig1");
  EXPECT_EQ(invoke(cfg), kExitCheckFailed);
}

TEST(Cli, SpectrumIsPositiveAndDecreasing) {
  RunConfig cfg;
  cfg.command = "spectrum";
  cfg.op = "laplace:a=1,b=2";
  cfg.out_dir = scratch("spectrum");
  std::string out;
  EXPECT_EQ(invoke(cfg, &out), kExitPass);
  std::istringstream in(out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,eigenvalue");
  double prev = INFINITY;
  int rows = 0;
  while (std::getline(in, line)) {
    const double mu = std::stod(line.substr(line.find(',') + 1));
    EXPECT_GT(mu, 0);
    EXPECT_LT(mu, prev);
    prev = mu;
    ++rows;
  }
  EXPECT_EQ(rows, 12);
}

TEST(Cli, MatchFourierWithinTolerance) {
  RunConfig cfg;
  cfg.command = "match";
  cfg.op = "fourier";
  cfg.m = 10;
  cfg.out_dir = scratch("match");
  std::string out;
  EXPECT_EQ(invoke(cfg, &out), kExitPass);
  EXPECT_LE(nlohmann::json::parse(out)["max_relative_residual"].get<double>(), 1e-6);
}

TEST(Cli, AdversarialWritesArtifacts) {
  RunConfig cfg;
  cfg.command = "adversarial";
  cfg.op = "hilbert:I=0,1:J=2,3";
  cfg.basis_size = 6;
  cfg.out_dir = scratch("adversarial");
  EXPECT_EQ(invoke(cfg), kExitPass);
  for (const char* f : {"adversarial.json", "worst_function.csv", "worst_function.svg"})
    EXPECT_TRUE(fs::exists(cfg.out_dir / f)) << f;
  std::ifstream csv(cfg.out_dir / "worst_function.csv");
  int lines = 0;
  for (std::string l; std::getline(csv, l);) ++lines;
  EXPECT_EQ(lines, 513);
}

TEST(Cli, UsageErrors) {
  RunConfig cfg;
  cfg.out_dir = scratch("usage");
  cfg.command = "spectrum";
  cfg.op = "bogus";
  EXPECT_EQ(invoke(cfg), kExitUsage);
  cfg.op = "laplace:a=1,b=2";
  cfg.n = 2048;
  EXPECT_EQ(invoke(cfg), kExitUsage);
  cfg.n = 256;
  cfg.N = 1000;
  EXPECT_EQ(invoke(cfg), kExitUsage);
  cfg.N = 128;
  cfg.command = "verify";
  EXPECT_EQ(invoke(cfg), kExitUsage);
  cfg.command = "launch";
  EXPECT_EQ(invoke(cfg), kExitUsage);
}

TEST(Cli, OutputsAreByteIdenticalAcrossRuns) {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.lemma = 3;
  cfg.count = 60;
  cfg.out_dir = scratch("det_a");
  ASSERT_EQ(invoke(cfg), kExitPass);
  const std::string first = slurp(cfg.out_dir / "lemma3.json");
  cfg.out_dir = scratch("det_b");
  ASSERT_EQ(invoke(cfg), kExitPass);
  EXPECT_EQ(first, slurp(cfg.out_dir / "lemma3.json"));
  EXPECT_NE(first.find("\"schema\": \"illposed/1\""), std::string::npos);
}

TEST(Cli, EnvironmentOverridesOutputDirectory) {
  const fs::path env_dir = scratch("env");
  ::setenv("ILLPOSED_OUT_DIR", env_dir.c_str(), 1);
  RunConfig cfg;
  cfg.command = "figures";
  cfg.figure_id = 2;
  cfg.out_dir = scratch("ignored");
  invoke(cfg);
  ::unsetenv("ILLPOSED_OUT_DIR");
  EXPECT_TRUE(fs::exists(env_dir / "figure2.json"));
  EXPECT_FALSE(fs::exists(cfg.out_dir / "figure2.json"));
}
