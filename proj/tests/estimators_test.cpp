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

#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "streamscope/corpus.hpp"
#include "streamscope/detectors.hpp"
#include "streamscope/estimators.hpp"
#include "streamscope/verify.hpp"
#include "test_util.hpp"

namespace streamscope {
namespace {

using testing_util::error_code;
using testing_util::make_graph;

double factorial(int t) { return t <= 1 ? 1.0 : t * factorial(t - 1); }

TEST(Gamma, SmallValues) {
  EXPECT_DOUBLE_EQ(gamma_k(3, 0.5), 0.125);
  EXPECT_NEAR(gamma_k(4, 0.1), 1.0 / 6000, 1e-18);
  EXPECT_DOUBLE_EQ(gamma_k(1, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(gamma_disc(0, 0.3), 1.0);
  EXPECT_NEAR(gamma_disc(3, 0.2), 0.008 / 6, 1e-18);
}

TEST(Gamma, MatchesClosedForm) {
  for (int t = 0; t <= 20; ++t) {
    const double want = std::pow(0.4, t) / factorial(t);
    EXPECT_NEAR(gamma_disc(t, 0.4) / want, 1.0, 1e-12) << t;
    EXPECT_NEAR(gamma_k(t + 1, 0.4) / want, 1.0, 1e-12) << t;
  }
}

TEST(Gamma, ContinuousAcrossLargeArguments) {
  for (std::size_t t = 60; t <= 70; ++t) {
    const double ratio = gamma_disc(t + 1, 0.5) / gamma_disc(t, 0.5);
    EXPECT_NEAR(ratio, 0.5 / (t + 1), 1e-9 * ratio);
  }
}

TEST(SampleRoots, WithoutReplacementIsDistinct) {
  Rng rng(1);
  const auto roots = sample_roots(50, 50, SampleMode::kWithoutReplacement, rng);
  EXPECT_EQ(std::set<VertexId>(roots.begin(), roots.end()).size(), 50u);
  for (VertexId v : roots) {
    EXPECT_GE(v, 1u);
    EXPECT_LE(v, 50u);
  }
}

TEST(SampleRoots, ModesAndErrors) {
  EXPECT_EQ(resolve_sample_mode(10, 5, SampleMode::kAuto),
            SampleMode::kWithoutReplacement);
  EXPECT_EQ(resolve_sample_mode(10, 50, SampleMode::kAuto),
            SampleMode::kWithReplacement);
  Rng rng(2);
  EXPECT_EQ(sample_roots(10, 50, SampleMode::kWithReplacement, rng).size(), 50u);
  EXPECT_TRUE(error_code([&] {
    sample_roots(10, 50, SampleMode::kWithoutReplacement, rng);
  }).has_value());
}

TEST(SampleRoots, UniformWithoutReplacement) {
  // Each vertex appears in a 3-of-10 sample with probability 0.3.
  Rng rng(3);
  std::vector<int> hits(11);
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    for (VertexId v : sample_roots(10, 3, SampleMode::kWithoutReplacement, rng))
      ++hits[v];
  }
  const double sigma = std::sqrt(0.3 * 0.7 / trials);
  for (VertexId v = 1; v <= 10; ++v) {
    EXPECT_NEAR(hits[v] / double(trials), 0.3, 3 * sigma);
  }
}

TEST(Params, Validation) {
  EstimatorParams p;
  p.tau = 0.0;
  EXPECT_EQ(error_code([&] { validate(p); }), ErrorCode::kInvalidArgument);
  p.tau = 0.5;
  p.s = 0;
  EXPECT_EQ(error_code([&] { validate(p); }), ErrorCode::kInvalidArgument);
  p.s = 1;
  p.k_max = 0;
  EXPECT_EQ(error_code([&] { validate(p); }), ErrorCode::kInvalidArgument);
}

TEST(NumCC, IsolatedVerticesCountExactly) {
  const Graph g = corpus::empty_graph(50);
  EstimatorParams p;
  p.tau = 0.2;
  p.s = 20;
  p.k_max = 4;
  p.seed = 8;
  const EstimateReport r = num_cc(given_order_stream(g), g.n(), p);
  EXPECT_DOUBLE_EQ(r.total, 50.0);
  EXPECT_DOUBLE_EQ(r.per_k.at(1), 50.0);
  EXPECT_EQ(r.stats.reads, 0u);
}

// Recomputes the indicator counts with standalone detectors and checks the
// estimator's aggregation against the closed-form scaling.
TEST(NumCC, AggregationMatchesHandCounts) {
  Rng rng(21);
  const Graph g = corpus::small_components(60, 4, rng);
  EstimatorParams p;
  p.tau = 0.4;
  p.s = g.n();
  p.k_max = 4;
  p.sample_mode = SampleMode::kWithoutReplacement;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    p.seed = seed;
    const EdgeStream stream = shuffle_stream(g, seed + 100);
    const EstimateReport r = num_cc(stream, g.n(), p);
    EXPECT_EQ(r.m_observed, g.m());
    for (std::size_t k = 1; k <= p.k_max; ++k) {
      std::uint64_t good = 0;
      for (VertexId v = 1; v <= g.n(); ++v) {
        TreeDetector det(v, k);
        for (const auto& item : stream.items()) det.update(item.edge, item.time);
        good += det.finalize(r.lambda).good;
      }
      const std::uint64_t counted =
          r.indicator_counts.contains(k) ? r.indicator_counts.at(k) : 0;
      EXPECT_EQ(counted, good) << "k=" << k;
      const double want =
          static_cast<double>(good) / p.s * g.n() / k / gamma_k(k, p.tau);
      const double got = r.per_k.contains(k) ? r.per_k.at(k) : 0.0;
      EXPECT_NEAR(got, want, 1e-9 * std::max(1.0, want));
    }
  }
}

TEST(NumCC, DisjointEdgesMeanMatchesEnumerator) {
  const Graph g = corpus::repeat(corpus::path(2), 10);
  const OutcomeDistribution exact =
      enumerate_outcomes(corpus::path(2), 1, 2, std::nullopt, 0.3);
  const double p_good = static_cast<double>(exact.exact_good());
  const double expected = 10.0 * p_good / gamma_k(2, 0.3);
  EXPECT_NEAR(expected, 10.0, 1e-12);

  EstimatorParams p;
  p.tau = 0.3;
  p.s = 20;
  p.k_max = 4;
  const int seeds = 2000;
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < seeds; ++i) {
    p.seed = derive_seed(77, "edges", i);
    const EstimateReport r =
        num_cc(shuffle_stream(g, derive_seed(p.seed, "stream")), g.n(), p);
    const double c2 = r.per_k.contains(2) ? r.per_k.at(2) : 0.0;
    sum += c2;
    sum_sq += c2 * c2;
  }
  const double mean = sum / seeds;
  const double sd = std::sqrt(sum_sq / seeds - mean * mean);
  EXPECT_NEAR(mean, expected, 3 * sd / std::sqrt(double(seeds)));
}

TEST(NumCC, EveryEdgeReadOnce) {
  Rng rng(4);
  const Graph g = corpus::random_gnm(100, 300, rng);
  EstimatorParams p;
  p.s = 30;
  p.k_max = 6;
  const EstimateReport r = num_cc(shuffle_stream(g, 1), g.n(), p);
  EXPECT_EQ(r.stats.reads, g.m());
  EXPECT_LE(r.stats.peak_slots, p.s * p.k_max * (p.k_max + 1));
}

TEST(MstWeight, SingleWeightSkipsStreaming) {
  const Graph g = load_edge_list("1 2 1\n2 3 1\n3 4 1");
  EstimatorParams p;
  p.s = 4;
  const MstReport r = mst_weight(given_order_stream(g), g.n(), 1, p);
  EXPECT_DOUBLE_EQ(r.estimate, 3.0);
  EXPECT_FALSE(r.streamed);
  EXPECT_TRUE(r.thresholds.empty());
}

TEST(MstWeight, EstimateIsIdentityOverThresholds) {
  Rng rng(6);
  const Graph g = corpus::random_connected_weighted(30, 20, 4, rng);
  EstimatorParams p;
  p.tau = 0.3;
  p.s = 30;
  p.k_max = 5;
  p.seed = 12;
  p.epsilon = 0.2;
  p.rho = 0.1;
  const MstReport r = mst_weight(shuffle_stream(g, 3), g.n(), 4, p);
  ASSERT_EQ(r.thresholds.size(), 3u);
  double sum = 0;
  for (const EstimateReport& t : r.thresholds) sum += t.total;
  EXPECT_NEAR(r.estimate, 30.0 - 4.0 + sum, 1e-9);
  EXPECT_EQ(r.stats.reads, g.m());
  EXPECT_DOUBLE_EQ(r.instance_epsilon, 0.2 / 16);
  EXPECT_DOUBLE_EQ(r.instance_rho, 0.1 / 4);
}

TEST(MstWeight, BadWeight) {
  const Graph g = load_edge_list("1 2 1\n2 3 3");
  EstimatorParams p;
  EXPECT_EQ(error_code([&] { mst_weight(given_order_stream(g), 3, 2, p); }),
            ErrorCode::kBadWeight);
  EXPECT_EQ(error_code([&] {
              mst_weight(given_order_stream(corpus::triangle()), 3, 2, p);
            }),
            ErrorCode::kUnweightedStream);
}

TEST(NumDisc, AggregationMatchesHandCounts) {
  const Graph g = corpus::disc_corpus();
  EstimatorParams p;
  p.tau = 0.5;
  p.s = g.n();
  p.sample_mode = SampleMode::kWithoutReplacement;
  p.seed = 5;
  const std::size_t k = 2, d = 2;
  const EdgeStream stream = shuffle_stream(g, 9);
  const DiscReport r = num_disc(stream, g.n(), k, d, p);
  std::map<DiscType, std::uint64_t> counts;
  for (VertexId v = 1; v <= g.n(); ++v) {
    DiscDetector det(v, k, d);
    for (const auto& item : stream.items()) det.update(item.edge, item.time);
    const DiscOutcome out = det.finalize(r.lambda);
    if (out.good) ++counts[out.type];
  }
  EXPECT_EQ(r.indicator_counts, counts);
  for (const auto& [type, count] : counts) {
    const double want = static_cast<double>(count) / p.s * g.n() /
                        gamma_disc(type.num_edges, p.tau);
    EXPECT_NEAR(r.per_type.at(type), want, 1e-9 * want);
    EXPECT_EQ(r.witnesses.at(type).size(), count);
  }
}

TEST(Asymptotic, Parameters) {
  const AsymptoticParameters a = asymptotic_parameters(0.5, 1.0 / 3);
  EXPECT_NEAR(a.log10_tau, -27 * std::log10(8.0) + std::log10(1.0 / 3), 1e-9);
  EXPECT_NEAR(a.log10_tau, -24.86, 0.01);
  EXPECT_NEAR(a.log10_s, 120 * std::log10(8.0) + 5 * std::log10(3.0), 1e-9);
  EXPECT_NEAR(a.log10_s, 110.8, 0.05);
  EXPECT_EQ(error_code([] { asymptotic_parameters(0.0, 0.1); }),
            ErrorCode::kInvalidArgument);
}

// ---- MIS ------------------------------------------------------------------

TEST(Mis, ExactPipelineOnDisjointEdges) {
  const Graph g = corpus::repeat(corpus::path(2), 50);
  const DiscReport report = exact_disc_report(g, 2, 2);
  const ReferenceMisOracle oracle(g);
  const MisEstimate est = mis_estimate(report, g.n(), 2, 1, 4000, oracle, 3);
  EXPECT_EQ(est.samples, 4000u);
  // Each sample is accepted with probability exactly 1/2.
  const double sd = 100 * std::sqrt(0.25 / 4000);
  EXPECT_NEAR(est.estimate, 50.0, 4 * sd);
}

TEST(Mis, IsolatedVerticesAreAllInTheSet) {
  const Graph g = corpus::empty_graph(30);
  const DiscReport report = exact_disc_report(g, 2, 2);
  const ReferenceMisOracle oracle(g);
  const MisEstimate est = mis_estimate(report, g.n(), 2, 1, 100, oracle, 1);
  EXPECT_DOUBLE_EQ(est.estimate, 30.0);
  EXPECT_EQ(est.accepted, 100u);
}

TEST(Mis, ExactPipelineIsUnbiasedOnSmallComponents) {
  Rng rng(13);
  const Graph g = corpus::small_components(120, 5, rng);
  const std::uint64_t truth = exact_mis(g, 64).size;
  const DiscReport report = exact_disc_report(g, 3, 2);
  const ReferenceMisOracle oracle(g);
  const MisEstimate est = mis_estimate(report, g.n(), 2, 2, 20000, oracle, 9);
  const double sd = g.n() * 0.5 / std::sqrt(20000.0);
  EXPECT_NEAR(est.estimate, static_cast<double>(truth), 4 * sd);
}

TEST(Mis, OracleAgreesWithExactSolver) {
  Rng rng(19);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = corpus::small_components(40, 6, rng);
    const MisResult mis = exact_mis(g, 64);
    const std::set<VertexId> members(mis.witness.begin(), mis.witness.end());
    const ReferenceMisOracle oracle(g, 64);
    for (VertexId v = 1; v <= g.n(); ++v) {
      EXPECT_EQ(oracle.contains_root(v, RootedDisc(v)), members.contains(v));
    }
  }
}

TEST(Mis, Errors) {
  const Graph g = corpus::path(30);
  const ReferenceMisOracle small(g, 10);
  EXPECT_EQ(error_code([&] { small.contains_root(1, RootedDisc(1)); }),
            ErrorCode::kComponentTooLarge);

  const DiscReport report = exact_disc_report(corpus::empty_graph(5), 2, 2);
  const ReferenceMisOracle oracle(g);
  EXPECT_EQ(error_code([&] { mis_estimate(report, 5, 2, 2, 10, oracle, 1); }),
            ErrorCode::kInvalidArgument);
  DiscReport empty = report;
  empty.per_type.clear();
  empty.indicator_counts.clear();
  empty.witnesses.clear();
  EXPECT_EQ(error_code([&] { mis_estimate(empty, 5, 2, 1, 10, oracle, 1); }),
            ErrorCode::kAllEstimatesNonpositive);
}

}  // namespace
}  // namespace streamscope
