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

#ifndef STREAMSCOPE_ESTIMATORS_HPP_
#define STREAMSCOPE_ESTIMATORS_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "streamscope/canonical.hpp"
#include "streamscope/rng.hpp"
#include "streamscope/stream.hpp"

namespace streamscope {

enum class SampleMode : std::uint8_t {
  kAuto,  // without replacement when s <= n
  kWithoutReplacement,
  kWithReplacement,
};

std::string_view to_string(SampleMode mode);

struct EstimatorParams {
  double tau = 0.1;
  std::uint64_t s = 1;
  std::size_t k_max = 1;
  // Target accuracies. Recorded in reports; runs are driven by tau, s, k_max.
  double epsilon = 0.0;
  double rho = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  SampleMode sample_mode = SampleMode::kAuto;
};

// Checks 0 < tau < 1, s >= 1, k_max >= 1.
void validate(const EstimatorParams& params);

struct PassStats {
  std::uint64_t reads = 0;
  std::uint64_t peak_slots = 0;  // max over time of live tree/disc vertices
  std::uint64_t detectors = 0;
  // Wall time of the read-and-update loop. Not part of serialized reports.
  std::uint64_t stream_nanos = 0;
};

struct EstimateReport {
  std::map<std::size_t, double> per_k;
  double total = 0.0;
  EstimatorParams params;
  std::map<std::size_t, std::uint64_t> indicator_counts;
  std::uint64_t m_observed = 0;
  std::uint64_t lambda = 0;
  std::uint64_t sample_size = 0;
  std::uint64_t distinct_roots = 0;
  SampleMode sample_mode = SampleMode::kWithoutReplacement;
  PassStats stats;
};

struct MstReport {
  double estimate = 0.0;
  Weight max_weight = 0;
  bool streamed = false;
  // Entry t - 1 holds the component estimate of the weight-<=t subgraph.
  std::vector<EstimateReport> thresholds;
  EstimatorParams params;
  double instance_epsilon = 0.0;
  double instance_rho = 0.0;
  std::uint64_t m_observed = 0;
  PassStats stats;
};

struct DiscReport {
  std::size_t k = 0;
  std::size_t d = 0;
  std::map<DiscType, double> per_type;
  std::map<DiscType, std::uint64_t> indicator_counts;
  // Sampled roots detected with each type, repeated by multiplicity.
  std::map<DiscType, std::vector<VertexId>> witnesses;
  EstimatorParams params;
  std::uint64_t m_observed = 0;
  std::uint64_t lambda = 0;
  std::uint64_t sample_size = 0;
  std::uint64_t distinct_roots = 0;
  SampleMode sample_mode = SampleMode::kWithoutReplacement;
  PassStats stats;
};

double gamma_k(std::size_t k, double tau);
double gamma_disc(std::size_t edges, double tau);

// Draws the root sample A (labels 1..n, with multiplicity when sampling
// with replacement), sorted ascending.
std::vector<VertexId> sample_roots(std::uint32_t n, std::uint64_t s,
                                   SampleMode mode, Rng& rng);
SampleMode resolve_sample_mode(std::uint32_t n, std::uint64_t s,
                               SampleMode mode);

// Reads `source` to exhaustion exactly once.
EstimateReport num_cc(EdgeSource& source, std::uint32_t n,
                      const EstimatorParams& params);
EstimateReport num_cc(const EdgeStream& stream, std::uint32_t n,
                      const EstimatorParams& params);

MstReport mst_weight(EdgeSource& source, std::uint32_t n, Weight max_weight,
                     const EstimatorParams& params);
MstReport mst_weight(const EdgeStream& stream, std::uint32_t n,
                     Weight max_weight, const EstimatorParams& params);

DiscReport num_disc(EdgeSource& source, std::uint32_t n, std::size_t k,
                    std::size_t d, const EstimatorParams& params);
DiscReport num_disc(const EdgeStream& stream, std::uint32_t n, std::size_t k,
                    std::size_t d, const EstimatorParams& params);

// Answers whether `root` belongs to the independent set chosen for its
// part. `part` is the projected bounded disc around `root` (root at position
// 0, canonical labels); local oracles work from it alone.
class RootMembershipOracle {
 public:
  virtual ~RootMembershipOracle() = default;
  virtual bool contains_root(VertexId root, const RootedDisc& part) const = 0;
  virtual std::string_view name() const = 0;
};

// Exact reference: the lexicographically smallest maximum independent set of
// the root's whole connected component in `g`. Components are solved on
// first use. Throws ComponentTooLarge past `component_cap` (at most 64).
class ReferenceMisOracle final : public RootMembershipOracle {
 public:
  explicit ReferenceMisOracle(const Graph& g, std::size_t component_cap = 24);
  bool contains_root(VertexId root, const RootedDisc& part) const override;
  std::string_view name() const override { return "reference-exact-mis"; }
  std::size_t component_cap() const { return component_cap_; }

 private:
  const Graph& graph_;
  std::size_t component_cap_;
  mutable std::vector<std::int8_t> in_set_;  // -1 unknown, 0 out, 1 in
};

struct MisEstimate {
  double estimate = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;
  std::string_view oracle;
};

// `report` must come from num_disc at radius k + 1 and degree bound d. Each
// sample draws a type with probability proportional to its positive
// estimate, then one of its witnesses uniformly.
MisEstimate mis_estimate(const DiscReport& report, std::uint32_t n,
                         std::size_t d, std::size_t k, std::uint64_t samples,
                         const RootMembershipOracle& oracle,
                         std::uint64_t seed);

struct AsymptoticParameters {
  double log10_tau = 0.0;
  double log10_s = 0.0;
};

// Base-10 logs of the asymptotic component-counting settings with unit
// constants. For documentation; never used to drive a run.
AsymptoticParameters asymptotic_parameters(double epsilon, double rho);
// log10 of the disc-frequency tau setting for `num_types` disc types.
double asymptotic_disc_log10_tau(double rho, double delta, std::size_t k,
                                 std::size_t d, double num_types);

}  // namespace streamscope

#endif  // STREAMSCOPE_ESTIMATORS_HPP_
