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

#ifndef STREAMSCOPE_VERIFY_HPP_
#define STREAMSCOPE_VERIFY_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streamscope/canonical.hpp"
#include "streamscope/detectors.hpp"
#include "streamscope/estimators.hpp"
#include "streamscope/graph.hpp"

namespace streamscope {

using Rational = boost::multiprecision::cpp_rational;

// Component size -> number of components, isolated vertices included.
std::map<std::size_t, std::uint64_t> exact_cc_histogram(const Graph& g);
std::uint64_t count_components(const Graph& g);

// Throws Disconnected.
std::uint64_t kruskal_mst(const Graph& g);

struct MisResult {
  std::size_t size = 0;
  std::vector<VertexId> witness;  // ascending
};

// Per-component exact search. Throws ComponentTooLarge when a component
// exceeds `size_cap` (at most 64).
MisResult exact_mis(const Graph& g, std::size_t size_cap);

namespace detail {
// Lexicographically smallest maximum independent set of a graph on at most
// 64 vertices given as neighbour bitmasks; returns ascending indices.
std::vector<std::uint32_t> lexmin_mis(std::span<const std::uint64_t> adjacency);
}  // namespace detail

struct DiscFrequencies {
  // disc_code(cano_disc(g, v, k, d)) over all v.
  std::map<DiscType, std::uint64_t> extended;
  // project_extended_disc(cano_disc(g, v, k + 1, d), k, d) over all v.
  std::map<DiscType, std::uint64_t> projected;
};

DiscFrequencies exact_disc_freq(const Graph& g, std::size_t k, std::size_t d);
// A disc report carrying the exact extended frequencies, with every vertex
// as a witness of its own type.
DiscReport exact_disc_report(const Graph& g, std::size_t k, std::size_t d);

// disc_code of the radius-k ball in truncate_high_degree(g, d), per vertex.
std::map<DiscType, std::uint64_t> bounded_disc_freq(const Graph& g,
                                                    std::size_t k,
                                                    std::size_t d);

struct Outcome {
  BadReason reason = BadReason::kNone;  // kNone means Good
  DiscType type;                        // disc detectors only

  bool good() const { return reason == BadReason::kNone; }
  std::string label() const;
  friend bool operator==(const Outcome&, const Outcome&) = default;
  friend auto operator<=>(const Outcome& a, const Outcome& b) {
    if (auto c = a.reason <=> b.reason; c != 0) return c;
    return a.type <=> b.type;
  }
};

struct OutcomeDistribution {
  // Exact results fill `exact`; Monte-Carlo results fill `counts`.
  std::map<Outcome, Rational> exact;
  std::map<Outcome, std::uint64_t> counts;
  std::map<Outcome, double> probability;
  std::uint64_t trials = 0;

  // Total probability of Good outcomes (any disc type).
  double good() const;
  Rational exact_good() const;
};

// Converts a probability to the rational of its shortest decimal form, so
// 0.3 becomes 3/10.
Rational decimal_rational(double value);

inline constexpr std::size_t kMaxEnumerationEdges = 8;

// Every permutation of E against Lambda ~ Bi(m, tau). With `d` set the
// disc detector is replayed, otherwise the tree detector. Throws
// TooManyEdges above kMaxEnumerationEdges.
OutcomeDistribution enumerate_outcomes(const Graph& g, VertexId root,
                                       std::size_t k,
                                       std::optional<std::size_t> d,
                                       double tau);

// Seeded trials in fixed blocks; the result does not depend on `jobs`.
OutcomeDistribution montecarlo_outcomes(const Graph& g, VertexId root,
                                        std::size_t k,
                                        std::optional<std::size_t> d,
                                        double tau, std::uint64_t trials,
                                        std::uint64_t seed,
                                        unsigned jobs = 1);

// |p_hat - p| <= 3 * sqrt(p (1 - p) / trials).
bool within_three_sigma(double exact, double empirical, std::uint64_t trials);

}  // namespace streamscope

#endif  // STREAMSCOPE_VERIFY_HPP_
