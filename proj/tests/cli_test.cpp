// Copyright 2026 The streamscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "streamscope/corpus.hpp"
#include "streamscope/graph.hpp"
#include "streamscope/verify.hpp"

namespace streamscope {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int status = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  const std::string command =
      std::string(STREAMSCOPE_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) {
    r.output.append(buf.data(), got);
  }
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("streamscope_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write(const std::string& name, const Graph& g) {
    return write(name, serialize_edge_list(g));
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST_F(CliTest, RunCcWritesReport) {
  const std::string in = write("g.el", corpus::component_corpus());
  const RunResult r = run("run-cc --input " + in +
                          " --n 230 --tau 0.1 --samples 2000 --kmax 8 --seed 7 --out " +
                          path("r.json"));
  ASSERT_EQ(r.status, 0) << r.output;
  const auto j = nlohmann::json::parse(slurp(path("r.json")));
  EXPECT_TRUE(j.contains("total"));
  EXPECT_EQ(j.at("n"), 230);
}

TEST_F(CliTest, SameSeedSameBytes) {
  const std::string in = write("g.el", corpus::component_corpus());
  const std::string args = "run-cc --input " + in + " --n 230 --samples 300 --seed 3";
  ASSERT_EQ(run(args + " --out " + path("a.json")).status, 0);
  ASSERT_EQ(run(args + " --out " + path("b.json")).status, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(CliTest, SeedFromEnvironment) {
  const std::string in = write("g.el", corpus::component_corpus());
  const std::string args = "run-cc --input " + in + " --n 230 --samples 300";
  ASSERT_EQ(run(args + " --seed 11 --out " + path("flag.json")).status, 0);
  const std::string command = "STREAMSCOPE_SEED=11 " +
                              std::string(STREAMSCOPE_CLI_PATH) + " " + args +
                              " --out " + path("env.json");
  ASSERT_EQ(std::system(command.c_str()), 0);
  EXPECT_EQ(slurp(path("env.json")), slurp(path("flag.json")));
}

TEST_F(CliTest, MissingVertexCount) {
  const std::string in = write("g.el", corpus::triangle());
  const RunResult r = run("run-cc --input " + in);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.output.find("--n"), std::string::npos) << r.output;
}

TEST_F(CliTest, BadTau) {
  const std::string in = write("g.el", corpus::triangle());
  EXPECT_EQ(run("run-cc --input " + in + " --n 3 --tau 1.5").status, 2);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run("run-cc --input " + path("missing.el") + " --n 3").status, 3);
  const std::string loop = write("loop.el", "1 1\n");
  EXPECT_EQ(run("run-cc --input " + loop + " --n 3 --exact").status, 3);
}

TEST_F(CliTest, ExactComponentCount) {
  const std::string in = write("g.el", corpus::component_corpus());
  const RunResult r = run("run-cc --exact --input " + in + " --n 230");
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(nlohmann::json::parse(r.output).at("total"), 100);
}

TEST_F(CliTest, ExactMst) {
  const std::string in = write("k3.el", "1 2 1\n1 3 2\n2 3 3\n");
  const RunResult r = run("run-mst --exact --input " + in + " --n 3 --W 3");
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(nlohmann::json::parse(r.output).at("total"), 3);
}

TEST_F(CliTest, MstWithSingleWeight) {
  const std::string in = write("p.el", "1 2 1\n2 3 1\n3 4 1\n");
  const RunResult r = run("run-mst --input " + in + " --n 4 --W 1 --samples 4");
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.output).at("total").get<double>(), 3.0);
}

TEST_F(CliTest, MstBadWeight) {
  const std::string in = write("bad.el", "1 2 1\n2 3 5\n");
  const RunResult r = run("run-mst --input " + in + " --n 3 --W 2");
  EXPECT_EQ(r.status, 4) << r.output;
}

TEST_F(CliTest, RunDisc) {
  const std::string in = write("t.el", corpus::repeat(corpus::triangle(), 10));
  const RunResult r = run("run-disc --input " + in +
                          " --n 30 --k 1 --d 2 --tau 0.3 --samples 30 --seed 1");
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_TRUE(nlohmann::json::parse(r.output).contains("per_type"));
  const RunResult exact = run("run-disc --exact --input " + in + " --n 30 --k 1 --d 2");
  ASSERT_EQ(exact.status, 0) << exact.output;
  EXPECT_EQ(nlohmann::json::parse(exact.output).at("per_type").size(), 1u);
}

TEST_F(CliTest, RunMisOnDisjointEdges) {
  const std::string in = write("m.el", corpus::repeat(corpus::path(2), 100));
  const RunResult r = run("run-mis --input " + in +
                          " --n 200 --k 1 --d 2 --tau 0.5 --samples 200"
                          " --mis-samples 2000 --seed 4");
  ASSERT_EQ(r.status, 0) << r.output;
  const double est = nlohmann::json::parse(r.output).at("total").get<double>();
  EXPECT_NEAR(est, 100.0, 30.0);
}

TEST_F(CliTest, RunMisComponentTooLarge) {
  const std::string in = write("p.el", corpus::path(40));
  const RunResult r = run("run-mis --input " + in +
                          " --n 40 --k 1 --d 2 --tau 0.5 --samples 40"
                          " --mis-component-cap 10 --seed 1");
  EXPECT_EQ(r.status, 5) << r.output;
}

TEST_F(CliTest, GenerateRoundTrip) {
  ASSERT_EQ(run("generate --corpus mst-path --out " + path("p.el")).status, 0);
  const Graph g = load_edge_list_file(path("p.el"));
  EXPECT_EQ(g.n(), 200u);
  EXPECT_EQ(kruskal_mst(g), 249u);
}

TEST_F(CliTest, Params) {
  const RunResult r = run("params --epsilon 0.5 --rho 0.3333333333333333");
  ASSERT_EQ(r.status, 0) << r.output;
  const auto j = nlohmann::json::parse(r.output);
  EXPECT_NEAR(j.at("log10_tau").get<double>(), -24.86, 0.01);
  EXPECT_NEAR(j.at("log10_s").get<double>(), 110.8, 0.05);
}

TEST_F(CliTest, VerifySingleCheck) {
  const RunResult r = run("verify --only mst-identity");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("mst-identity"), std::string::npos);
}

TEST_F(CliTest, VerifyDetectsDepthGapMutation) {
  const RunResult r = run("verify --only exact-probabilities --mutate depth-gap");
  EXPECT_EQ(r.status, 1) << r.output;
  EXPECT_NE(r.output.find("FAIL"), std::string::npos) << r.output;
}

TEST_F(CliTest, StreamOrderGivenReadsFileDirectly) {
  const std::string in = write("g.el", corpus::component_corpus());
  const RunResult r = run("run-cc --stream-order given --input " + in +
                          " --n 230 --samples 100 --seed 2");
  ASSERT_EQ(r.status, 0) << r.output;
  const auto j = nlohmann::json::parse(r.output);
  EXPECT_EQ(j.at("stats").at("reads"), j.at("m"));
}

}  // namespace
}  // namespace streamscope
