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

#ifndef STREAMSCOPE_STREAM_HPP_
#define STREAMSCOPE_STREAM_HPP_

#include <cstdint>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streamscope/graph.hpp"
#include "streamscope/rng.hpp"

namespace streamscope {

using TimeStep = std::uint64_t;

struct StreamItem {
  Edge edge;
  TimeStep time = 0;  // 1-based
};

// A materialised edge stream: a permutation of a graph's edges with
// time-steps 1..m in order.
class EdgeStream {
 public:
  EdgeStream() = default;
  EdgeStream(std::vector<StreamItem> items, bool weighted, Weight max_weight)
      : items_(std::move(items)), weighted_(weighted), max_weight_(max_weight) {}

  std::span<const StreamItem> items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool weighted() const { return weighted_; }
  Weight max_weight() const { return max_weight_; }

  // Re-timestamps `edges` as 1..m.
  static EdgeStream from_edges(std::span<const Edge> edges, bool weighted,
                               Weight max_weight);

 private:
  std::vector<StreamItem> items_;
  bool weighted_ = false;
  Weight max_weight_ = 0;
};

// Uniform random permutation (Fisher-Yates) driven only by `seed`.
EdgeStream shuffle_stream(const Graph& g, std::uint64_t seed);
// Edges in the graph's construction (file) order; for debugging.
EdgeStream given_order_stream(const Graph& g);

// In-place Fisher-Yates; shared by the stream generator and the Monte-Carlo
// harness so both draw permutations identically.
template <typename T>
void fisher_yates(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng.uniform_index(i);
    std::swap(items[i - 1], items[j]);
  }
}

struct PhaseThreshold {
  std::uint64_t lambda = 0;
  double tau = 0.0;
  std::uint64_t m = 0;
};

// Online Bi(m, tau) sampler: one biased coin per stream edge, constant
// state. The coin RNG is separate from the permutation RNG.
class PhaseCoin {
 public:
  PhaseCoin(double tau, std::uint64_t seed);

  void flip() {
    ++flips_;
    if (rng_.coin(tau_)) ++heads_;
  }
  PhaseThreshold threshold() const { return {heads_, tau_, flips_}; }

 private:
  double tau_;
  Rng rng_;
  std::uint64_t heads_ = 0;
  std::uint64_t flips_ = 0;
};

PhaseThreshold sample_lambda_online(std::uint64_t m, double tau,
                                    std::uint64_t seed);

// Sub-stream of edges with weight <= t, re-timestamped 1..m^(t) in the
// original relative order.
EdgeStream threshold_view(const EdgeStream& stream, Weight t);

// Forward-only edge source. Estimators consume streams exclusively through
// this interface.
class EdgeSource {
 public:
  virtual ~EdgeSource() = default;
  virtual std::optional<StreamItem> next() = 0;
  virtual bool weighted() const = 0;
  virtual Weight max_weight() const = 0;
};

class MaterializedSource final : public EdgeSource {
 public:
  explicit MaterializedSource(const EdgeStream& stream) : stream_(stream) {}
  std::optional<StreamItem> next() override {
    if (pos_ >= stream_.size()) return std::nullopt;
    return stream_.items()[pos_++];
  }
  bool weighted() const override { return stream_.weighted(); }
  Weight max_weight() const override { return stream_.max_weight(); }

 private:
  const EdgeStream& stream_;
  std::size_t pos_ = 0;
};

// Reads an edge-list file line by line in file order without materialising
// it. Per-line checks only: labels within [1..n], no self-loops, weights in
// [1..W]. Duplicate detection would need O(m) memory and is not attempted.
class EdgeListFileSource final : public EdgeSource {
 public:
  EdgeListFileSource(const std::string& path, std::uint32_t n,
                     std::optional<Weight> max_weight);
  std::optional<StreamItem> next() override;
  bool weighted() const override { return weighted_; }
  Weight max_weight() const override { return max_weight_; }

 private:
  std::ifstream in_;
  std::uint32_t n_;
  bool weighted_ = false;
  Weight max_weight_ = 0;
  std::optional<StreamItem> pending_;
  std::size_t line_no_ = 0;
  TimeStep time_ = 0;
  std::optional<StreamItem> read_one();
};

// Pass-discipline instrumentation: counts items and verifies every item is
// delivered exactly once with consecutive time-steps.
class CountingSource final : public EdgeSource {
 public:
  explicit CountingSource(EdgeSource& inner) : inner_(inner) {}
  std::optional<StreamItem> next() override;
  bool weighted() const override { return inner_.weighted(); }
  Weight max_weight() const override { return inner_.max_weight(); }
  std::uint64_t reads() const { return reads_; }
  bool exhausted() const { return exhausted_; }

 private:
  EdgeSource& inner_;
  std::uint64_t reads_ = 0;
  bool exhausted_ = false;
};

}  // namespace streamscope

#endif  // STREAMSCOPE_STREAM_HPP_
