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

#include "streamscope/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <numeric>
#include <thread>

#include <boost/pending/disjoint_sets.hpp>

#include "streamscope/error.hpp"
#include "streamscope/rng.hpp"
#include "streamscope/stream.hpp"

namespace streamscope {

namespace {

using UnionFind = boost::disjoint_sets_with_storage<>;

UnionFind components_of(const Graph& g) {
  UnionFind uf(g.n() + 1);
  for (const Edge& e : g.edges()) uf.union_set(e.u, e.v);
  return uf;
}

}  // namespace

std::map<std::size_t, std::uint64_t> exact_cc_histogram(const Graph& g) {
  UnionFind uf = components_of(g);
  std::vector<std::size_t> size(g.n() + 1, 0);
  for (VertexId v = 1; v <= g.n(); ++v) ++size[uf.find_set(v)];
  std::map<std::size_t, std::uint64_t> hist;
  for (std::size_t s : size) {
    if (s > 0) ++hist[s];
  }
  return hist;
}

std::uint64_t count_components(const Graph& g) {
  std::uint64_t total = 0;
  for (const auto& [size, count] : exact_cc_histogram(g)) total += count;
  return total;
}

std::uint64_t kruskal_mst(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) {
                     return a.weight < b.weight;
                   });
  UnionFind uf(g.n() + 1);
  std::uint64_t total = 0;
  std::size_t joined = 0;
  for (const Edge& e : edges) {
    if (uf.find_set(e.u) == uf.find_set(e.v)) continue;
    uf.union_set(e.u, e.v);
    total += e.weight;
    ++joined;
  }
  if (g.n() > 0 && joined + 1 != g.n()) {
    throw Error(ErrorCode::kDisconnected,
                "graph has " + std::to_string(g.n() - joined) + " components");
  }
  return total;
}

// ---- maximum independent set ----------------------------------------------

namespace detail {
namespace {

// Size of a maximum independent set inside `mask`.
std::size_t alpha(std::span<const std::uint64_t> adj, std::uint64_t mask) {
  if (mask == 0) return 0;
  std::uint32_t pick = 0;
  int best = -1;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<std::uint32_t>(std::countr_zero(rest));
    const int deg = std::popcount(adj[v] & mask);
    if (deg > best) {
      best = deg;
      pick = v;
    }
    if (deg == 0) {
      // Isolated in mask: always take it.
      return 1 + alpha(adj, mask & ~(std::uint64_t{1} << v));
    }
  }
  const std::uint64_t bit = std::uint64_t{1} << pick;
  if (best == 1) {
    // A matching: dropping one end of an edge keeps some optimum.
    return alpha(adj, mask & ~bit);
  }
  const std::size_t with = 1 + alpha(adj, mask & ~bit & ~adj[pick]);
  const std::size_t without = alpha(adj, mask & ~bit);
  return std::max(with, without);
}

}  // namespace

std::vector<std::uint32_t> lexmin_mis(std::span<const std::uint64_t> adj) {
  const std::size_t n = adj.size();
  if (n > 64) {
    throw Error(ErrorCode::kComponentTooLarge, "more than 64 vertices");
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1;
  const std::size_t target = alpha(adj, all);
  std::vector<std::uint32_t> chosen;
  std::uint64_t open = all;  // vertices still undecided and not blocked
  for (std::uint32_t v = 0; v < n && chosen.size() < target; ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    if ((open & bit) == 0) continue;
    const std::uint64_t later = open & ~bit & ~adj[v] & ~((bit << 1) - 1);
    if (chosen.size() + 1 + alpha(adj, later) == target) {
      chosen.push_back(v);
      open &= ~bit & ~adj[v];
    } else {
      open &= ~bit;
    }
  }
  return chosen;
}

}  // namespace detail

MisResult exact_mis(const Graph& g, std::size_t size_cap) {
  size_cap = std::min<std::size_t>(size_cap, 64);
  UnionFind uf = components_of(g);
  std::map<VertexId, std::vector<VertexId>> parts;
  for (VertexId v = 1; v <= g.n(); ++v) {
    parts[static_cast<VertexId>(uf.find_set(v))].push_back(v);
  }
  MisResult result;
  for (const auto& [rep, members] : parts) {
    if (members.size() > size_cap) {
      throw Error(ErrorCode::kComponentTooLarge,
                  "component of vertex " + std::to_string(members.front()) +
                      " has " + std::to_string(members.size()) +
                      " vertices, cap is " + std::to_string(size_cap));
    }
    // Members are ascending, so index order is label order.
    std::vector<std::uint64_t> adj(members.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (VertexId w : g.neighbors(members[i])) {
        const auto j = std::lower_bound(members.begin(), members.end(), w) -
                       members.begin();
        adj[i] |= std::uint64_t{1} << j;
      }
    }
    for (std::uint32_t i : detail::lexmin_mis(adj)) {
      result.witness.push_back(members[i]);
    }
  }
  std::sort(result.witness.begin(), result.witness.end());
  result.size = result.witness.size();
  return result;
}

// ---- disc frequencies -----------------------------------------------------

DiscFrequencies exact_disc_freq(const Graph& g, std::size_t k, std::size_t d) {
  DiscFrequencies out;
  for (VertexId v = 1; v <= g.n(); ++v) {
    ++out.extended[disc_code(cano_disc(g, v, k, d))];
    ++out.projected[project_extended_disc(cano_disc(g, v, k + 1, d), k, d)];
  }
  return out;
}

DiscReport exact_disc_report(const Graph& g, std::size_t k, std::size_t d) {
  DiscReport r;
  r.k = k;
  r.d = d;
  r.sample_size = g.n();
  r.distinct_roots = g.n();
  for (VertexId v = 1; v <= g.n(); ++v) {
    const DiscType type = disc_code(cano_disc(g, v, k, d));
    ++r.indicator_counts[type];
    r.witnesses[type].push_back(v);
  }
  for (const auto& [type, count] : r.indicator_counts) {
    r.per_type[type] = static_cast<double>(count);
  }
  return r;
}

std::map<DiscType, std::uint64_t> bounded_disc_freq(const Graph& g,
                                                    std::size_t k,
                                                    std::size_t d) {
  const Graph bounded = truncate_high_degree(g, d);
  std::map<DiscType, std::uint64_t> out;
  for (VertexId v = 1; v <= g.n(); ++v) {
    ++out[disc_code(induced_disc(bounded, v, k))];
  }
  return out;
}

// ---- outcome distributions ------------------------------------------------

std::string Outcome::label() const {
  if (!good()) return "Bad(" + std::string(to_string(reason)) + ")";
  if (type.code.empty()) return "Good";
  return "Good(" + type.hex() + ")";
}

double OutcomeDistribution::good() const {
  double p = 0.0;
  for (const auto& [outcome, prob] : probability) {
    if (outcome.good()) p += prob;
  }
  return p;
}

Rational OutcomeDistribution::exact_good() const {
  Rational p = 0;
  for (const auto& [outcome, prob] : exact) {
    if (outcome.good()) p += prob;
  }
  return p;
}

Rational decimal_rational(double value) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                           std::chars_format::fixed);
  const std::string text(buf.data(), res.ptr);
  const auto dot = text.find('.');
  std::string digits = text;
  boost::multiprecision::cpp_int denominator = 1;
  if (dot != std::string::npos) {
    digits.erase(dot, 1);
    for (std::size_t i = dot + 1; i < text.size(); ++i) denominator *= 10;
  }
  const boost::multiprecision::cpp_int numerator(digits);
  return Rational(numerator, denominator);
}

namespace {

void check_enumerable(const Graph& g, VertexId root, std::size_t k,
                      std::optional<std::size_t> d) {
  if (root < 1 || root > g.n()) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "root " + std::to_string(root) + " not in graph");
  }
  if (!d && k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
}

// Outcome of a complete replay with Lambda = m, and the t_last that decides
// whether a Good finish survives a smaller Lambda.
struct Replay {
  Outcome outcome;
  TimeStep t_last = 0;
};

template <typename Detector>
Replay finish(const Detector& det, std::uint64_t m) {
  Replay r;
  if constexpr (std::is_same_v<Detector, TreeDetector>) {
    const TreeOutcome out = det.finalize(m);
    r.outcome.reason = out.reason;
  } else {
    DiscOutcome out = det.finalize(m);
    r.outcome.reason = out.reason;
    r.outcome.type = std::move(out.type);
  }
  r.t_last = r.outcome.good() ? det.t_last() : 0;
  return r;
}

template <typename Detector>
Replay replay(Detector& det, VertexId root, std::span<const Edge> order) {
  det.reset(root);
  TimeStep t = 0;
  for (const Edge& e : order) det.update(e, ++t);
  return finish(det, order.size());
}

Outcome late() { return Outcome{BadReason::kLateCompletion, {}}; }

template <typename Detector>
OutcomeDistribution enumerate_with(Detector det, const Graph& g, VertexId root,
                                   double tau) {
  const std::size_t m = g.m();
  std::vector<Edge> order(g.edges().begin(), g.edges().end());
  std::sort(order.begin(), order.end());
  std::map<std::pair<Outcome, TimeStep>, std::uint64_t> tally;
  std::uint64_t perms = 0;
  do {
    Replay r = replay(det, root, order);
    ++tally[{std::move(r.outcome), r.t_last}];
    ++perms;
  } while (std::next_permutation(order.begin(), order.end()));

  // tail[t] = Pr[Bi(m, tau) >= t].
  const Rational p = decimal_rational(tau);
  const Rational q = 1 - p;
  std::vector<Rational> mass(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    boost::multiprecision::cpp_int binom = 1;
    for (std::size_t i = 0; i < j; ++i) binom = binom * (m - i) / (i + 1);
    Rational term = binom;
    for (std::size_t i = 0; i < j; ++i) term *= p;
    for (std::size_t i = j; i < m; ++i) term *= q;
    mass[j] = term;
  }
  std::vector<Rational> tail(m + 2, Rational(0));
  for (std::size_t t = m + 1; t-- > 0;) tail[t] = tail[t + 1] + mass[t];

  OutcomeDistribution dist;
  for (const auto& [key, count] : tally) {
    const auto& [outcome, t_last] = key;
    const Rational share = Rational(count, perms);
    if (!outcome.good()) {
      dist.exact[outcome] += share;
      continue;
    }
    const Rational kept = share * tail[t_last];
    if (kept != 0) dist.exact[outcome] += kept;
    if (share - kept != 0) dist.exact[late()] += share - kept;
  }
  for (const auto& [outcome, prob] : dist.exact) {
    dist.probability[outcome] = static_cast<double>(prob);
  }
  return dist;
}

constexpr std::uint64_t kBlockTrials = 1 << 14;

template <typename Detector>
std::map<Outcome, std::uint64_t> run_block(Detector det, const Graph& g,
                                           VertexId root, double tau,
                                           std::uint64_t trials,
                                           std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> order(g.edges().begin(), g.edges().end());
  std::array<std::uint64_t, 5> by_reason{};
  std::map<Outcome, std::uint64_t> by_type;
  const std::uint64_t m = order.size();
  for (std::uint64_t i = 0; i < trials; ++i) {
    fisher_yates(std::span<Edge>(order), rng);
    std::uint64_t lambda = 0;
    for (std::uint64_t j = 0; j < m; ++j) lambda += rng.coin(tau) ? 1 : 0;
    det.reset(root);
    TimeStep t = 0;
    for (const Edge& e : order) det.update(e, ++t);
    if constexpr (std::is_same_v<Detector, TreeDetector>) {
      ++by_reason[static_cast<std::size_t>(det.finalize(lambda).reason)];
    } else {
      DiscOutcome out = det.finalize(lambda);
      ++by_type[Outcome{out.reason, std::move(out.type)}];
    }
  }
  for (std::size_t r = 0; r < by_reason.size(); ++r) {
    if (by_reason[r] > 0) {
      by_type[Outcome{static_cast<BadReason>(r), {}}] += by_reason[r];
    }
  }
  return by_type;
}

template <typename Detector>
OutcomeDistribution montecarlo_with(const Detector& prototype, const Graph& g,
                                    VertexId root, double tau,
                                    std::uint64_t trials, std::uint64_t seed,
                                    unsigned jobs) {
  const std::uint64_t blocks = (trials + kBlockTrials - 1) / kBlockTrials;
  std::vector<std::map<Outcome, std::uint64_t>> results(blocks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b; (b = next.fetch_add(1)) < blocks;) {
      const std::uint64_t size =
          std::min(kBlockTrials, trials - b * kBlockTrials);
      results[b] = run_block(prototype, g, root, tau, size,
                             derive_seed(seed, "montecarlo", b));
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(blocks)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  OutcomeDistribution dist;
  dist.trials = trials;
  for (const auto& block : results) {
    for (const auto& [outcome, count] : block) dist.counts[outcome] += count;
  }
  for (const auto& [outcome, count] : dist.counts) {
    dist.probability[outcome] =
        static_cast<double>(count) / static_cast<double>(trials);
  }
  return dist;
}

}  // namespace

OutcomeDistribution enumerate_outcomes(const Graph& g, VertexId root,
                                       std::size_t k,
                                       std::optional<std::size_t> d,
                                       double tau) {
  check_enumerable(g, root, k, d);
  if (g.m() > kMaxEnumerationEdges) {
    throw Error(ErrorCode::kTooManyEdges,
                std::to_string(g.m()) + " edges, enumeration limit is " +
                    std::to_string(kMaxEnumerationEdges));
  }
  if (!(tau > 0.0 && tau < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tau must lie in (0,1)");
  }
  if (d) return enumerate_with(DiscDetector(root, k, *d), g, root, tau);
  return enumerate_with(TreeDetector(root, k), g, root, tau);
}

OutcomeDistribution montecarlo_outcomes(const Graph& g, VertexId root,
                                        std::size_t k,
                                        std::optional<std::size_t> d,
                                        double tau, std::uint64_t trials,
                                        std::uint64_t seed, unsigned jobs) {
  check_enumerable(g, root, k, d);
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials >= 1");
  if (!(tau > 0.0 && tau < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tau must lie in (0,1)");
  }
  if (d) {
    return montecarlo_with(DiscDetector(root, k, *d), g, root, tau, trials,
                           seed, jobs);
  }
  return montecarlo_with(TreeDetector(root, k), g, root, tau, trials, seed,
                         jobs);
}

bool within_three_sigma(double exact, double empirical, std::uint64_t trials) {
  const double sigma =
      std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
  return std::abs(empirical - exact) <= 3.0 * sigma + 1e-12;
}

}  // namespace streamscope
