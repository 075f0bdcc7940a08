#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcs/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qcs");
  std::ostringstream out, err;
  const int code = qcs::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, EvalNormalization) {
  const auto r = run({"--q", "0.5", "eval", "norm", "--x", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("norm = 1.58948735268758"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("achieved rel tol"), std::string::npos);
}

TEST(Cli, EvalExamples) {
  auto r = run({"--q", "1", "eval", "mandel", "--x", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("mandel = 0.0000000000000000e+00"), std::string::npos) << r.out;
  r = run({"--q", "0.7", "eval", "metric", "--x", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("metric = 6.99999999999999"), std::string::npos) << r.out;
  r = run({"--q", "0.7", "eval", "varx", "--z", "0.5,-0.25"});
  EXPECT_EQ(r.code, 0) << r.err;
  r = run({"--q", "0.5", "eval", "rho", "--n", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(r.out.substr(r.out.find('=') + 1)), 1.5, 1e-15) << r.out;
}

TEST(Cli, EveryQuantityEvaluates) {
  for (const auto& name : qcs::cli::eval_quantities()) {
    const auto r = run({"--q", "0.8", "eval", name, "--x", "1.5", "--n", "2"});
    EXPECT_EQ(r.code, 0) << name << ": " << r.err;
  }
  EXPECT_EQ(qcs::cli::eval_quantities().size(), 15u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"--q", "0.5", "eval", "nonsense", "--x", "1"}).code, 2);
  EXPECT_EQ(run({"--q", "1.5", "eval", "norm", "--x", "1"}).code, 2);
  EXPECT_EQ(run({"--q", "0", "eval", "norm", "--x", "1"}).code, 2);
  EXPECT_EQ(run({"--q", "0.5", "eval", "norm"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"figure", "12"}).code, 2);
  EXPECT_EQ(run({"verify", "bogus"}).code, 2);
  EXPECT_EQ(run({"--q", "0.7", "sample", "--x", "1", "--draws", "10"}).code, 2);
  EXPECT_EQ(run({"--frobnicate"}).code, 2);
}

TEST(Cli, NonConvergence) {
  // About 10^6 explicit product factors are needed, beyond the term cap.
  const auto r = run({"--q", "0.99999", "eval", "norm", "--x", "1e9"});
  EXPECT_EQ(r.code, 3) << r.out << r.err;
}

TEST(Cli, FigureToStdoutAndFile) {
  const auto r = run({"--points", "5", "figure", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x,Q_{1},Q_{0.9},Q_{0.8},Q_{0.7}");
  const auto path = std::filesystem::temp_directory_path() / "qcs_cli_fig6.csv";
  const auto w = run({"--points", "5", "--out", path.string(), "figure", "6"});
  EXPECT_EQ(w.code, 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), r.out);
  std::filesystem::remove(path);
}

TEST(Cli, FigureOverrides) {
  const auto r = run({"--q", "0.5,0.6", "--points", "3", "--x-max", "2", "figure", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x,R_{0.5},R_{0.6}");
  EXPECT_NE(r.out.find("\n2.0000000000000000e+00,"), std::string::npos);
}

TEST(Cli, UnwritableOutput) {
  EXPECT_EQ(run({"--out", "/nonexistent-dir/qcs/out.csv", "figure", "2"}).code, 4);
}

TEST(Cli, VerifyPassingSuite) {
  const auto r = run({"--q", "0.8", "verify", "fock"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS eigenstate residual"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyMomentsJson) {
  const auto r = run({"--q", "0.8", "--format", "json", "verify", "moments"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("\"suite\": \"moments\""), std::string::npos);
  EXPECT_NE(r.out.find("\"pass\": true"), std::string::npos);
}

TEST(Cli, VerifyFailureExitCode) {
  // A moment threshold no quadrature can meet.
  const auto r = run({"--q", "0.8", "--tol", "1e-30", "verify", "moments"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL moment"), std::string::npos);
}

TEST(Cli, SampleDeterministic) {
  const std::vector<std::string> args = {"--q", "0.7", "--seed", "5", "sample", "--x", "2",
                                         "--draws", "200000"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("rng=mt19937_64"), std::string::npos);
  EXPECT_NE(a.out.find("verdict=PASS"), std::string::npos);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("eval"), std::string::npos);
}
