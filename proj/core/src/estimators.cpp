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

#include "streamscope/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "streamscope/detectors.hpp"
#include "streamscope/error.hpp"

namespace streamscope {

std::string_view to_string(SampleMode mode) {
  switch (mode) {
    case SampleMode::kAuto: return "auto";
    case SampleMode::kWithoutReplacement: return "without_replacement";
    case SampleMode::kWithReplacement: return "with_replacement";
  }
  return "unknown";
}

void validate(const EstimatorParams& params) {
  if (!(params.tau > 0.0 && params.tau < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tau must lie in (0,1)");
  }
  if (params.s < 1) throw Error(ErrorCode::kInvalidArgument, "s must be >= 1");
  if (params.k_max < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k_max must be >= 1");
  }
}

double gamma_k(std::size_t k, double tau) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  return gamma_disc(k - 1, tau);
}

double gamma_disc(std::size_t edges, double tau) {
  if (edges <= 64) {
    double g = 1.0;
    for (std::size_t i = 1; i <= edges; ++i) g *= tau / static_cast<double>(i);
    return g;
  }
  const double t = static_cast<double>(edges);
  return std::exp(t * std::log(tau) - std::lgamma(t + 1.0));
}

SampleMode resolve_sample_mode(std::uint32_t n, std::uint64_t s,
                               SampleMode mode) {
  if (mode == SampleMode::kAuto) {
    return s <= n ? SampleMode::kWithoutReplacement
                  : SampleMode::kWithReplacement;
  }
  if (mode == SampleMode::kWithoutReplacement && s > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot sample " + std::to_string(s) + " of " +
                    std::to_string(n) + " vertices without replacement");
  }
  return mode;
}

std::vector<VertexId> sample_roots(std::uint32_t n, std::uint64_t s,
                                   SampleMode mode, Rng& rng) {
  if (n == 0) throw Error(ErrorCode::kEmptyVertexSet, "graph has no vertices");
  mode = resolve_sample_mode(n, s, mode);
  std::vector<VertexId> out;
  out.reserve(s);
  if (mode == SampleMode::kWithReplacement) {
    for (std::uint64_t i = 0; i < s; ++i) {
      out.push_back(static_cast<VertexId>(rng.uniform_index(n) + 1));
    }
  } else {
    // Floyd's algorithm: O(s) memory regardless of n.
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(s);
    for (std::uint64_t j = n - s + 1; j <= n; ++j) {
      const std::uint64_t t = rng.uniform_index(j) + 1;
      const std::uint64_t pick = chosen.contains(t) ? j : t;
      chosen.insert(pick);
      out.push_back(static_cast<VertexId>(pick));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t nanos_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                           start)
          .count());
}

// Distinct roots with their multiplicity in the sample.
std::vector<std::pair<VertexId, std::uint64_t>> group_roots(
    const std::vector<VertexId>& roots) {
  std::vector<std::pair<VertexId, std::uint64_t>> out;
  for (VertexId v : roots) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

// A set of detectors fed from one stream. Edges are routed only to detectors
// whose collected vertex set touches an endpoint; any other edge leaves a
// detector unchanged.
template <typename Detector>
class DetectorGrid {
 public:
  std::uint32_t add(Detector det, std::uint64_t multiplicity) {
    const auto id = static_cast<std::uint32_t>(detectors_.size());
    watch_[det.root()].push_back(id);
    live_slots_ += det.slots();
    detectors_.push_back(std::move(det));
    multiplicity_.push_back(multiplicity);
    peak_slots_ = std::max(peak_slots_, live_slots_);
    return id;
  }

  void offer(const Edge& e, TimeStep t) {
    scratch_.clear();
    collect(e.u);
    collect(e.v);
    if (scratch_.empty()) return;
    std::sort(scratch_.begin(), scratch_.end());
    scratch_.erase(std::unique(scratch_.begin(), scratch_.end()),
                   scratch_.end());
    for (std::uint32_t id : scratch_) {
      Detector& det = detectors_[id];
      const std::size_t before = det.slots();
      det.update(e, t);
      const std::size_t after = det.slots();
      live_slots_ = live_slots_ - before + after;
      if (after > before) watch_[vertices_of(det).back()].push_back(id);
    }
    peak_slots_ = std::max(peak_slots_, live_slots_);
  }

  const std::vector<Detector>& detectors() const { return detectors_; }
  std::uint64_t multiplicity(std::size_t id) const { return multiplicity_[id]; }
  std::uint64_t peak_slots() const { return peak_slots_; }

 private:
  static const std::vector<VertexId>& vertices_of(const TreeDetector& d) {
    return d.tree().vertices();
  }
  static const std::vector<VertexId>& vertices_of(const DiscDetector& d) {
    return d.disc().vertices();
  }

  // Appends live watchers of v and drops dead ones.
  void collect(VertexId v) {
    auto it = watch_.find(v);
    if (it == watch_.end()) return;
    auto& ids = it->second;
    std::erase_if(ids, [&](std::uint32_t id) { return detectors_[id].bad(); });
    if (ids.empty()) {
      watch_.erase(it);
      return;
    }
    scratch_.insert(scratch_.end(), ids.begin(), ids.end());
  }

  std::vector<Detector> detectors_;
  std::vector<std::uint64_t> multiplicity_;
  std::unordered_map<VertexId, std::vector<std::uint32_t>> watch_;
  std::vector<std::uint32_t> scratch_;
  std::uint64_t live_slots_ = 0;
  std::uint64_t peak_slots_ = 0;
};

// One NumCC instance: its own root sample, phase coin and time counter.
class CcInstance {
 public:
  CcInstance(std::uint32_t n, const EstimatorParams& params,
             std::uint64_t sample_seed, std::uint64_t coin_seed)
      : n_(n), params_(params), coin_(params.tau, coin_seed) {
    Rng rng(sample_seed);
    mode_ = resolve_sample_mode(n, params.s, params.sample_mode);
    const auto roots = group_roots(sample_roots(n, params.s, mode_, rng));
    distinct_ = roots.size();
    for (const auto& [v, mult] : roots) {
      for (std::size_t k = 1; k <= params.k_max; ++k) {
        grid_.add(TreeDetector(v, k), mult);
      }
    }
  }

  void offer(const Edge& e) {
    coin_.flip();
    grid_.offer(e, ++time_);
  }

  std::uint64_t peak_slots() const { return grid_.peak_slots(); }

  EstimateReport finish() const {
    EstimateReport r;
    r.params = params_;
    r.sample_mode = mode_;
    r.sample_size = params_.s;
    r.distinct_roots = distinct_;
    const PhaseThreshold threshold = coin_.threshold();
    r.lambda = threshold.lambda;
    r.m_observed = time_;
    for (std::size_t k = 1; k <= params_.k_max; ++k) r.indicator_counts[k] = 0;
    const auto& dets = grid_.detectors();
    for (std::size_t i = 0; i < dets.size(); ++i) {
      if (dets[i].finalize(threshold).good) {
        r.indicator_counts[dets[i].k()] += grid_.multiplicity(i);
      }
    }
    const double s = static_cast<double>(params_.s);
    const double n = static_cast<double>(n_);
    for (const auto& [k, x] : r.indicator_counts) {
      const double c = static_cast<double>(x) / s *
                       (n / static_cast<double>(k)) / gamma_k(k, params_.tau);
      r.per_k[k] = c;
      r.total += c;
    }
    r.stats.peak_slots = grid_.peak_slots();
    r.stats.detectors = dets.size();
    return r;
  }

 private:
  std::uint32_t n_;
  EstimatorParams params_;
  PhaseCoin coin_;
  SampleMode mode_ = SampleMode::kWithoutReplacement;
  std::uint64_t distinct_ = 0;
  TimeStep time_ = 0;
  DetectorGrid<TreeDetector> grid_;
};

void check_n(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::kEmptyVertexSet, "graph has no vertices");
}

}  // namespace

EstimateReport num_cc(EdgeSource& source, std::uint32_t n,
                      const EstimatorParams& params) {
  check_n(n);
  validate(params);
  CcInstance instance(n, params, derive_seed(params.seed, "sample"),
                      derive_seed(params.seed, "lambda"));
  CountingSource counted(source);
  const auto start = Clock::now();
  while (auto item = counted.next()) instance.offer(item->edge);
  const std::uint64_t nanos = nanos_since(start);
  EstimateReport r = instance.finish();
  r.stats.reads = counted.reads();
  r.stats.stream_nanos = nanos;
  return r;
}

EstimateReport num_cc(const EdgeStream& stream, std::uint32_t n,
                      const EstimatorParams& params) {
  MaterializedSource source(stream);
  return num_cc(source, n, params);
}

MstReport mst_weight(EdgeSource& source, std::uint32_t n, Weight max_weight,
                     const EstimatorParams& params) {
  check_n(n);
  validate(params);
  if (max_weight < 1) throw Error(ErrorCode::kBadW, "W must be >= 1");
  if (!source.weighted()) {
    throw Error(ErrorCode::kUnweightedStream, "MST needs a weighted stream");
  }
  MstReport r;
  r.max_weight = max_weight;
  r.params = params;
  r.instance_epsilon = params.epsilon / (4.0 * max_weight);
  r.instance_rho = params.rho / max_weight;
  const double base = static_cast<double>(n) - static_cast<double>(max_weight);
  if (max_weight == 1) {
    r.estimate = base;
    return r;
  }
  r.streamed = true;
  std::vector<CcInstance> instances;
  instances.reserve(max_weight - 1);
  for (Weight t = 1; t < max_weight; ++t) {
    instances.emplace_back(n, params, derive_seed(params.seed, "sample", t),
                           derive_seed(params.seed, "lambda", t));
  }
  CountingSource counted(source);
  const auto start = Clock::now();
  while (auto item = counted.next()) {
    const Weight w = item->edge.weight;
    if (w < 1 || w > max_weight) {
      throw Error(ErrorCode::kBadWeight,
                  "weight " + std::to_string(w) + " outside [1, " +
                      std::to_string(max_weight) + "] at time-step " +
                      std::to_string(item->time));
    }
    for (Weight t = w; t < max_weight; ++t) instances[t - 1].offer(item->edge);
  }
  r.stats.stream_nanos = nanos_since(start);
  r.estimate = base;
  std::uint64_t slots = 0;
  for (const auto& inst : instances) {
    r.thresholds.push_back(inst.finish());
    r.estimate += r.thresholds.back().total;
    slots += inst.peak_slots();
    r.stats.detectors += r.thresholds.back().stats.detectors;
  }
  r.m_observed = counted.reads();
  r.stats.reads = counted.reads();
  r.stats.peak_slots = slots;
  return r;
}

MstReport mst_weight(const EdgeStream& stream, std::uint32_t n,
                     Weight max_weight, const EstimatorParams& params) {
  MaterializedSource source(stream);
  return mst_weight(source, n, max_weight, params);
}

DiscReport num_disc(EdgeSource& source, std::uint32_t n, std::size_t k,
                    std::size_t d, const EstimatorParams& params) {
  check_n(n);
  validate(params);
  DiscReport r;
  r.k = k;
  r.d = d;
  r.params = params;
  r.sample_mode = resolve_sample_mode(n, params.s, params.sample_mode);
  r.sample_size = params.s;
  Rng rng(derive_seed(params.seed, "sample"));
  const auto roots =
      group_roots(sample_roots(n, params.s, r.sample_mode, rng));
  r.distinct_roots = roots.size();

  DetectorGrid<DiscDetector> grid;
  for (const auto& [v, mult] : roots) grid.add(DiscDetector(v, k, d), mult);
  PhaseCoin coin(params.tau, derive_seed(params.seed, "lambda"));
  CountingSource counted(source);
  const auto start = Clock::now();
  while (auto item = counted.next()) {
    coin.flip();
    if (k > 0) grid.offer(item->edge, item->time);
  }
  r.stats.stream_nanos = nanos_since(start);
  const PhaseThreshold threshold = coin.threshold();
  r.lambda = threshold.lambda;
  r.m_observed = counted.reads();

  const auto& dets = grid.detectors();
  for (std::size_t i = 0; i < dets.size(); ++i) {
    DiscOutcome out = dets[i].finalize(threshold);
    if (!out.good) continue;
    r.indicator_counts[out.type] += grid.multiplicity(i);
    r.witnesses[out.type].insert(r.witnesses[out.type].end(),
                                 grid.multiplicity(i), dets[i].root());
  }
  const double s = static_cast<double>(params.s);
  for (const auto& [type, x] : r.indicator_counts) {
    r.per_type[type] = static_cast<double>(x) / s * static_cast<double>(n) /
                       gamma_disc(type.num_edges, params.tau);
  }
  r.stats.reads = counted.reads();
  r.stats.peak_slots = grid.peak_slots();
  r.stats.detectors = dets.size();
  return r;
}

DiscReport num_disc(const EdgeStream& stream, std::uint32_t n, std::size_t k,
                    std::size_t d, const EstimatorParams& params) {
  MaterializedSource source(stream);
  return num_disc(source, n, k, d, params);
}

AsymptoticParameters asymptotic_parameters(double epsilon, double rho) {
  if (!(epsilon > 0.0 && epsilon <= 0.5) || !(rho > 0.0 && rho < 0.5)) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon must lie in (0, 1/2], rho in (0, 1/2)");
  }
  const double l = std::log10(4.0 / epsilon);
  AsymptoticParameters p;
  p.log10_tau = (-6.0 / (epsilon * epsilon) - 3.0) * l + std::log10(rho);
  p.log10_s = (15.0 / (epsilon * epsilon * epsilon)) * l +
              (2.0 / epsilon + 1.0) * std::log10(1.0 / rho);
  return p;
}

double asymptotic_disc_log10_tau(double rho, double delta, std::size_t k,
                                 std::size_t d, double num_types) {
  if (rho <= 0 || delta <= 0 || num_types <= 0 || d < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "rho, delta, num_types must be positive and d >= 1");
  }
  const double exponent = 4.0 * static_cast<double>(k) *
                          std::pow(static_cast<double>(d + 1), 2.0 * k);
  return std::log10(rho * delta / num_types) -
         exponent * std::log10(2.0 * static_cast<double>(d));
}

}  // namespace streamscope
