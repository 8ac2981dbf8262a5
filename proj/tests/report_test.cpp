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

#include <json.hpp>

#include "streamscope/corpus.hpp"
#include "streamscope/report.hpp"
#include "streamscope/verify.hpp"

namespace streamscope {
namespace {

EstimatorParams cc_params(std::uint64_t seed) {
  EstimatorParams p;
  p.tau = 0.2;
  p.s = 100;
  p.k_max = 4;
  p.seed = seed;
  return p;
}

TEST(Report, SameSeedSameBytes) {
  const Graph g = corpus::component_corpus();
  const auto run = [&](std::uint64_t seed) {
    const EstimatorParams p = cc_params(seed);
    return report_json(num_cc(shuffle_stream(g, derive_seed(seed, "stream")),
                              g.n(), p),
                       g.n());
  };
  EXPECT_EQ(run(7), run(7));
  EXPECT_NE(run(7), run(8));
}

TEST(Report, CcFields) {
  const Graph g = corpus::component_corpus();
  const EstimateReport r = num_cc(shuffle_stream(g, 1), g.n(), cc_params(3));
  const auto j = nlohmann::json::parse(report_json(r, g.n()));
  EXPECT_EQ(j.at("n"), g.n());
  EXPECT_EQ(j.at("m"), g.m());
  EXPECT_DOUBLE_EQ(j.at("total").get<double>(), r.total);
  EXPECT_EQ(j.at("params").at("s"), 100);
  EXPECT_EQ(j.at("stats").at("reads"), g.m());
  EXPECT_FALSE(j.at("stats").contains("stream_nanos"));
}

TEST(Report, DiscAndMisFields) {
  const Graph g = corpus::repeat(corpus::path(2), 10);
  const DiscReport discs = exact_disc_report(g, 2, 2);
  const ReferenceMisOracle oracle(g);
  const MisEstimate mis = mis_estimate(discs, g.n(), 2, 1, 50, oracle, 1);
  const auto j = nlohmann::json::parse(report_json(discs, mis, g.n()));
  EXPECT_TRUE(j.at("discs").contains("per_type"));
  EXPECT_EQ(j.at("oracle"), std::string(oracle.name()));
  EXPECT_DOUBLE_EQ(j.at("total").get<double>(), mis.estimate);
  const auto jd = nlohmann::json::parse(report_json(discs, g.n()));
  for (const auto& [type, value] : discs.per_type) {
    EXPECT_TRUE(jd.at("per_type").contains(type.hex()));
  }
}

TEST(Report, MstFields) {
  const Graph g = corpus::mst_path_corpus();
  EstimatorParams p = cc_params(2);
  const MstReport r = mst_weight(shuffle_stream(g, 4), g.n(), 2, p);
  const auto j = nlohmann::json::parse(report_json(r, g.n()));
  EXPECT_DOUBLE_EQ(j.at("total").get<double>(), r.estimate);
}

}  // namespace
}  // namespace streamscope
