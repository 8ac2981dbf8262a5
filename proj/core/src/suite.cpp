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

#include "streamscope/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "streamscope/canonical.hpp"
#include "streamscope/corpus.hpp"
#include "streamscope/detectors.hpp"
#include "streamscope/error.hpp"
#include "streamscope/estimators.hpp"
#include "streamscope/verify.hpp"

namespace streamscope::suite {

namespace {

bool full(const Options& o) { return o.scale == Scale::kFull; }

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.n() << " [";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out << (first ? "" : " ") << e.u << '-' << e.v;
    if (g.weighted()) out << ':' << e.weight;
    first = false;
  }
  out << ']';
  return out.str();
}

std::string fixed(double x, int digits = 4) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << x;
  return out.str();
}

std::string sci(double x) {
  std::ostringstream out;
  out.precision(3);
  out << x;
  return out.str();
}

// Collects up to a few failing cases for the report.
class Failures {
 public:
  void add(const std::string& what) {
    if (++count_ <= 3) examples_ += (examples_.empty() ? "" : "; ") + what;
  }
  std::size_t count() const { return count_; }
  std::string summary() const {
    if (count_ == 0) return "";
    return " failing: " + examples_ + (count_ > 3 ? " ..." : "");
  }

 private:
  std::size_t count_ = 0;
  std::string examples_;
};

// ---- exact-probabilities ----------------------------------------------------

CheckResult exact_probabilities(const Options& o) {
  CheckResult r;
  const std::uint64_t trials = full(o) ? 1'000'000 : 100'000;
  struct Case {
    const char* name;
    Graph g;
    Rational expected;
  };
  const Rational tau = decimal_rational(0.3);
  const std::array<Case, 2> cases{
      Case{"triangle", corpus::triangle(),
           tau * tau / 2 - tau * tau * tau / 6},
      Case{"P4", corpus::path(4), tau * tau * tau / 3}};
  std::ostringstream detail;
  bool ok = true;
  std::uint64_t index = 0;
  for (const Case& c : cases) {
    const auto exact = enumerate_outcomes(c.g, 1, 3, std::nullopt, 0.3);
    const auto mc = montecarlo_outcomes(c.g, 1, 3, std::nullopt, 0.3, trials,
                                        derive_seed(o.seed, "exact", index++),
                                        o.jobs);
    const Rational p = exact.exact_good();
    const double pf = p.convert_to<double>();
    const bool exact_ok = p == c.expected;
    const bool mc_ok = within_three_sigma(pf, mc.good(), trials);
    ok = ok && exact_ok && mc_ok;
    detail << c.name << ": exact " << p << (exact_ok ? " == " : " != ")
           << c.expected << ", montecarlo " << fixed(mc.good(), 5) << " ("
           << (mc_ok ? "within" : "outside") << " 3 sigma); ";
  }
  r.passed = ok;
  r.detail = detail.str() + "trials=" + std::to_string(trials);
  return r;
}

// ---- enumerator-sweep -------------------------------------------------------

CheckResult enumerator_sweep(const Options& o) {
  CheckResult r;
  const std::uint64_t trials = full(o) ? 100'000 : 10'000;
  std::vector<Graph> graphs;
  for (std::uint32_t v = 1; v <= 5; ++v) {
    for (Graph& g : corpus::isomorphism_classes(v, 6)) {
      graphs.push_back(std::move(g));
    }
  }
  std::uint64_t cells = 0;
  Failures failures;
  for (const Graph& g : graphs) {
    for (VertexId root = 1; root <= g.n(); ++root) {
      for (std::size_t k = 1; k <= 5; ++k) {
        for (double tau : {0.1, 0.3}) {
          const std::uint64_t seed = derive_seed(o.seed, "sweep", cells++);
          const double exact =
              enumerate_outcomes(g, root, k, std::nullopt, tau).good();
          const double mc = montecarlo_outcomes(g, root, k, std::nullopt, tau,
                                                trials, seed, o.jobs)
                                .good();
          if (!within_three_sigma(exact, mc, trials)) {
            failures.add(describe(g) + " root=" + std::to_string(root) +
                         " k=" + std::to_string(k) + " tau=" + fixed(tau, 1) +
                         " exact=" + sci(exact) + " mc=" + sci(mc) +
                         " seed=" + std::to_string(seed));
          }
        }
      }
    }
  }
  // Strictly fewer than 0.5% of the cells may fall outside 3 sigma.
  r.passed = static_cast<double>(failures.count()) <
             0.005 * static_cast<double>(cells);
  r.detail = std::to_string(graphs.size()) + " graphs, " +
             std::to_string(cells) + " cells, " +
             std::to_string(failures.count()) + " outside 3 sigma (budget < " +
             fixed(0.005 * static_cast<double>(cells), 2) + "), trials=" +
             std::to_string(trials) + "." + failures.summary();
  return r;
}

// ---- canonical-replay -------------------------------------------------------

Graph random_small_graph(Rng& rng, std::uint32_t max_n, std::size_t max_m) {
  const auto n = static_cast<std::uint32_t>(rng.uniform_index(max_n) + 1);
  const std::uint64_t pairs = std::uint64_t{n} * (n - 1) / 2;
  const std::uint64_t cap = std::min<std::uint64_t>(pairs, max_m);
  const auto m = static_cast<std::size_t>(rng.uniform_index(cap + 1));
  return corpus::random_gnm(n, m, rng);
}

std::string tree_replay_failure(const Graph& g, VertexId v, std::size_t k) {
  const RootedTree ct = cbfs_tree(g, v, k);
  TreeDetector det(v, k);
  TimeStep t = 0;
  for (const Edge& e : cbfs_edge_order(ct)) det.update(e, ++t);
  const TreeOutcome out = det.finalize(g.m());
  const bool expect_good = ct.size() == k;
  if (out.good != expect_good) {
    return std::string("outcome ") +
           (out.good ? "Good" : std::string(to_string(out.reason)));
  }
  if (!det.bad() && (det.tree().vertices() != ct.vertices() ||
                     det.tree().arcs() != ct.arcs())) {
    return "collected tree differs";
  }
  return "";
}

std::string disc_replay_failure(const Graph& g, VertexId v, std::size_t k,
                                std::size_t d) {
  const RootedDisc cano = cano_disc(g, v, k, d);
  DiscDetector det(v, k, d);
  TimeStep t = 0;
  for (const Edge& e : disc_edge_order(cano)) det.update(e, ++t);
  const DiscOutcome out = det.finalize(g.m());
  if (!out.good) return "outcome " + std::string(to_string(out.reason));
  if (k > 0 && (det.disc().vertices() != cano.vertices() ||
                disc_edge_order(det.disc()) != disc_edge_order(cano))) {
    return "collected disc differs";
  }
  if (out.type != disc_code(cano)) return "disc code differs";
  return "";
}

CheckResult canonical_replay(const Options& o) {
  CheckResult r;
  const std::size_t graphs = full(o) ? 500 : 60;
  Rng rng(derive_seed(o.seed, "replay"));
  Failures failures;
  std::uint64_t cases = 0;
  for (std::size_t i = 0; i < graphs; ++i) {
    const Graph g = random_small_graph(rng, 30, 60);
    for (VertexId v = 1; v <= g.n(); ++v) {
      for (std::size_t k = 1; k <= 5; ++k) {
        ++cases;
        const std::string why = tree_replay_failure(g, v, k);
        if (!why.empty()) {
          failures.add("tree " + describe(g) + " root=" + std::to_string(v) +
                       " k=" + std::to_string(k) + ": " + why);
        }
      }
      for (std::size_t k = 0; k <= 3; ++k) {
        for (std::size_t d = 1; d <= 3; ++d) {
          ++cases;
          const std::string why = disc_replay_failure(g, v, k, d);
          if (!why.empty()) {
            failures.add("disc " + describe(g) + " root=" + std::to_string(v) +
                         " k=" + std::to_string(k) +
                         " d=" + std::to_string(d) + ": " + why);
          }
        }
      }
    }
  }
  r.passed = failures.count() == 0;
  r.detail = std::to_string(graphs) + " graphs, " + std::to_string(cases) +
             " replays, " + std::to_string(failures.count()) + " mismatches." +
             failures.summary();
  return r;
}

// ---- mst-identity -----------------------------------------------------------

CheckResult mst_identity(const Options& o) {
  CheckResult r;
  const std::size_t graphs = full(o) ? 200 : 50;
  Rng rng(derive_seed(o.seed, "mst-identity"));
  Failures failures;
  for (std::size_t i = 0; i < graphs; ++i) {
    const auto n = static_cast<std::uint32_t>(rng.uniform_index(50) + 1);
    const auto W = static_cast<Weight>(rng.uniform_index(5) + 1);
    const auto extra = static_cast<std::size_t>(rng.uniform_index(n + 1));
    const Graph g = corpus::random_connected_weighted(n, extra, W, rng);
    std::int64_t identity = static_cast<std::int64_t>(n) - W;
    for (Weight t = 1; t < W; ++t) {
      identity += static_cast<std::int64_t>(
          count_components(threshold_graph(g, t)));
    }
    const auto kruskal = static_cast<std::int64_t>(kruskal_mst(g));
    if (identity != kruskal) {
      failures.add(describe(g) + " W=" + std::to_string(W) + " identity=" +
                   std::to_string(identity) +
                   " kruskal=" + std::to_string(kruskal));
    }
  }
  r.passed = failures.count() == 0;
  r.detail = std::to_string(graphs) + " graphs, " +
             std::to_string(failures.count()) + " mismatches." +
             failures.summary();
  return r;
}

// ---- seeded end-to-end runs -------------------------------------------------

struct SeedTally {
  std::size_t runs = 0;
  std::size_t hits = 0;
  double worst = 0.0;
  std::vector<double> values;
};

std::string tally_detail(const SeedTally& t, const std::string& what) {
  std::vector<double> v = t.values;
  std::sort(v.begin(), v.end());
  const double median = v.empty() ? 0.0 : v[v.size() / 2];
  return std::to_string(t.hits) + "/" + std::to_string(t.runs) +
         " runs within tolerance; median " + what + " " + fixed(median, 2) +
         ", range [" + fixed(v.empty() ? 0.0 : v.front(), 2) + ", " +
         fixed(v.empty() ? 0.0 : v.back(), 2) + "]";
}

CheckResult numcc_end_to_end(const Options& o) {
  CheckResult r;
  const Graph g = corpus::component_corpus();
  const std::uint64_t truth = count_components(g);
  EstimatorParams params;
  params.tau = 0.1;
  params.s = 2000;
  params.k_max = 8;
  const double tolerance = 52.5;
  SeedTally tally;
  for (std::size_t i = 0; i < 100; ++i) {
    params.seed = derive_seed(o.seed, "numcc", i);
    const EdgeStream stream =
        shuffle_stream(g, derive_seed(params.seed, "stream"));
    const double total = num_cc(stream, g.n(), params).total;
    ++tally.runs;
    tally.values.push_back(total);
    if (std::abs(total - static_cast<double>(truth)) <= tolerance) ++tally.hits;
  }
  r.passed = tally.hits >= 90;
  r.detail = "truth " + std::to_string(truth) + ", tolerance " +
             fixed(tolerance, 1) + "; " + tally_detail(tally, "estimate");
  return r;
}

CheckResult mst_end_to_end(const Options& o) {
  CheckResult r;
  const Graph g = corpus::mst_path_corpus();
  const std::uint64_t truth = kruskal_mst(g);
  EstimatorParams params;
  params.tau = 0.05;
  params.s = 5000;
  params.k_max = 8;
  SeedTally tally;
  for (std::size_t i = 0; i < 100; ++i) {
    params.seed = derive_seed(o.seed, "mst", i);
    const EdgeStream stream =
        shuffle_stream(g, derive_seed(params.seed, "stream"));
    const double estimate = mst_weight(stream, g.n(), 2, params).estimate;
    ++tally.runs;
    tally.values.push_back(estimate);
    const double t = static_cast<double>(truth);
    if (estimate >= 0.75 * t && estimate <= 1.25 * t) ++tally.hits;
  }
  r.passed = truth == 249 && tally.hits >= 90;
  r.detail = "kruskal " + std::to_string(truth) + "; " +
             tally_detail(tally, "estimate");
  return r;
}

// ---- projection-equivalence -------------------------------------------------

CheckResult projection_equivalence(const Options& o) {
  CheckResult r;
  const std::size_t graphs = full(o) ? 200 : 40;
  Rng rng(derive_seed(o.seed, "projection"));
  Failures failures;
  std::uint64_t cases = 0;
  for (std::size_t i = 0; i < graphs; ++i) {
    const auto n = static_cast<std::uint32_t>(rng.uniform_index(40) + 1);
    const std::uint64_t pairs = std::uint64_t{n} * (n - 1) / 2;
    const auto m = static_cast<std::size_t>(
        rng.uniform_index(std::min<std::uint64_t>(pairs, 2 * n) + 1));
    const Graph g = corpus::random_gnm(n, m, rng);
    for (std::size_t d = 1; d <= 3; ++d) {
      const Graph bounded = truncate_high_degree(g, d);
      for (std::size_t k = 0; k <= 2; ++k) {
        for (VertexId v = 1; v <= n; ++v) {
          ++cases;
          const DiscType projected =
              project_extended_disc(cano_disc(g, v, k + 1, d), k, d);
          const DiscType direct = disc_code(induced_disc(bounded, v, k));
          if (projected != direct) {
            failures.add(describe(g) + " root=" + std::to_string(v) +
                         " k=" + std::to_string(k) +
                         " d=" + std::to_string(d));
          }
        }
      }
    }
  }
  r.passed = failures.count() == 0;
  r.detail = std::to_string(graphs) + " graphs, " + std::to_string(cases) +
             " cells, " + std::to_string(failures.count()) + " mismatches." +
             failures.summary();
  return r;
}

// ---- numdisc-end-to-end -----------------------------------------------------

CheckResult numdisc_end_to_end(const Options& o) {
  CheckResult r;
  const Graph g = corpus::disc_corpus();
  const std::size_t k = 2, d = 2;
  const auto truth = exact_disc_freq(g, k, d).extended;
  EstimatorParams params;
  params.tau = 0.2;
  params.s = 1500;
  params.k_max = 1;
  params.delta = 0.25;
  const double tolerance = 0.25 * g.n();
  SeedTally tally;
  for (std::size_t i = 0; i < 100; ++i) {
    params.seed = derive_seed(o.seed, "numdisc", i);
    const EdgeStream stream =
        shuffle_stream(g, derive_seed(params.seed, "stream"));
    const DiscReport report = num_disc(stream, g.n(), k, d, params);
    double worst = 0.0;
    for (const auto& [type, count] : truth) {
      const auto it = report.per_type.find(type);
      const double est = it == report.per_type.end() ? 0.0 : it->second;
      worst = std::max(worst, std::abs(est - static_cast<double>(count)));
    }
    for (const auto& [type, est] : report.per_type) {
      if (!truth.contains(type)) worst = std::max(worst, std::abs(est));
    }
    ++tally.runs;
    tally.values.push_back(worst);
    if (worst <= tolerance) ++tally.hits;
  }
  r.passed = tally.hits >= 90;
  r.detail = std::to_string(truth.size()) + " disc types, tolerance " +
             fixed(tolerance, 1) + "; " + tally_detail(tally, "max error");
  return r;
}

// ---- mis-pipeline -----------------------------------------------------------

CheckResult mis_pipeline(const Options& o) {
  CheckResult r;
  Rng corpus_rng(derive_seed(o.seed, "mis-corpus"));
  const Graph g = corpus::small_components(300, 6, corpus_rng);
  const std::size_t truth = exact_mis(g, 6).size;
  const std::size_t k = 2, d = 2;
  EstimatorParams params;
  params.tau = 0.2;
  params.s = 1500;
  params.k_max = 1;
  const ReferenceMisOracle oracle(g, 64);
  SeedTally tally;
  for (std::size_t i = 0; i < 100; ++i) {
    params.seed = derive_seed(o.seed, "mis", i);
    const EdgeStream stream =
        shuffle_stream(g, derive_seed(params.seed, "stream"));
    const DiscReport discs = num_disc(stream, g.n(), k + 1, d, params);
    const double est =
        mis_estimate(discs, g.n(), d, k, 500, oracle,
                     derive_seed(params.seed, "mis"))
            .estimate;
    ++tally.runs;
    tally.values.push_back(est);
    if (std::abs(est - static_cast<double>(truth)) <= 0.3 * truth) {
      ++tally.hits;
    }
  }
  r.passed = tally.hits >= 90;
  r.detail = "exact MIS " + std::to_string(truth) + "; " +
             tally_detail(tally, "estimate");
  return r;
}

// ---- pass-discipline --------------------------------------------------------

std::uint64_t disc_vertex_bound(std::size_t k, std::size_t d) {
  // Root plus at most d+1 children, then at most d new neighbours per vertex.
  std::uint64_t total = 1, level = d + 1;
  for (std::size_t depth = 1; depth <= k; ++depth) {
    total += level;
    level *= d;
  }
  return total;
}

CheckResult pass_discipline(const Options& o) {
  CheckResult r;
  const std::array<std::size_t, 3> sizes{1'000, 10'000, 100'000};
  EstimatorParams params;
  params.tau = 0.1;
  params.s = 200;
  params.k_max = 8;
  params.seed = derive_seed(o.seed, "discipline");
  const std::size_t disc_k = 2, disc_d = 2;
  const std::uint64_t cc_bound = params.s * params.k_max * (params.k_max + 1);
  const std::uint64_t disc_bound =
      params.s * disc_vertex_bound(disc_k, disc_d);
  const int repeats = full(o) ? 5 : 2;

  bool ok = true;
  std::ostringstream detail;
  std::array<double, 3> per_edge{};
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const Graph g = corpus::padded_corpus(sizes[i]);
    const EdgeStream stream = shuffle_stream(g, derive_seed(o.seed, "pad", i));
    std::vector<Edge> weighted;
    for (const Edge& e : g.edges()) {
      weighted.push_back(Edge::make(e.u, e.v, 1 + (e.u % 2)));
    }
    const Graph wg(g.n(), std::move(weighted), true, 2);
    const EdgeStream wstream =
        shuffle_stream(wg, derive_seed(o.seed, "pad-w", i));

    double best = 1e300;
    EstimateReport cc;
    for (int rep = 0; rep < repeats; ++rep) {
      cc = num_cc(stream, g.n(), params);
      best = std::min(best, static_cast<double>(cc.stats.stream_nanos) /
                                static_cast<double>(stream.size()));
    }
    per_edge[i] = best;
    const DiscReport disc = num_disc(stream, g.n(), disc_k, disc_d, params);
    const MstReport mst = mst_weight(wstream, wg.n(), 2, params);

    const bool reads_ok = cc.stats.reads == stream.size() &&
                          disc.stats.reads == stream.size() &&
                          mst.stats.reads == wstream.size();
    const bool space_ok = cc.stats.peak_slots <= cc_bound &&
                          disc.stats.peak_slots <= disc_bound &&
                          mst.stats.peak_slots <= cc_bound;
    ok = ok && reads_ok && space_ok;
    detail << "m=" << stream.size() << ": reads cc/disc/mst "
           << cc.stats.reads << "/" << disc.stats.reads << "/"
           << mst.stats.reads << ", peak slots cc " << cc.stats.peak_slots
           << "/" << cc_bound << " disc " << disc.stats.peak_slots << "/"
           << disc_bound << " mst " << mst.stats.peak_slots << ", "
           << fixed(best, 1) << " ns/edge; ";
  }
  const double growth = per_edge[2] / per_edge[0];
  ok = ok && growth < 2.0;
  detail << "per-edge time growth " << fixed(growth, 2) << "x";
  r.passed = ok;
  r.detail = detail.str();
  return r;
}

struct Entry {
  CheckInfo info;
  CheckResult (*run)(const Options&);
};

constexpr std::array<Entry, 10> kEntries{{
    {{"exact-probabilities", "enumerator closed forms and Monte-Carlo", true,
      30},
     exact_probabilities},
    {{"enumerator-sweep", "enumerator vs Monte-Carlo on all small graphs",
      true, 600},
     enumerator_sweep},
    {{"canonical-replay", "canonical orders replay to Good", true, 0},
     canonical_replay},
    {{"mst-identity", "threshold component identity equals Kruskal", true, 0},
     mst_identity},
    {{"numcc-end-to-end", "component count on the mixed corpus", false, 120},
     numcc_end_to_end},
    {{"mst-end-to-end", "MST weight on the path corpus", false, 300},
     mst_end_to_end},
    {{"projection-equivalence", "projected discs equal bounded discs", true,
      0},
     projection_equivalence},
    {{"numdisc-end-to-end", "disc frequencies on triangles and paths", false,
      180},
     numdisc_end_to_end},
    {{"mis-pipeline", "independent set size on small components", false, 180},
     mis_pipeline},
    {{"pass-discipline", "single pass, bounded space, flat update cost", false,
      0},
     pass_discipline},
}};

std::array<CheckInfo, kEntries.size()> make_infos() {
  std::array<CheckInfo, kEntries.size()> out{};
  for (std::size_t i = 0; i < kEntries.size(); ++i) out[i] = kEntries[i].info;
  return out;
}

const std::array<CheckInfo, kEntries.size()> kInfos = make_infos();

}  // namespace

std::span<const CheckInfo> checks() { return kInfos; }

const CheckInfo& find_check(std::string_view name) {
  for (const CheckInfo& info : kInfos) {
    if (info.name == name) return info;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown check '" + std::string(name) + "'");
}

CheckResult run_check(std::string_view name, const Options& options) {
  for (const Entry& entry : kEntries) {
    if (entry.info.name != name) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r = entry.run(options);
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    r.name = std::string(name);
    if (options.scale == Scale::kFull && entry.info.time_limit_s > 0 &&
        r.seconds > entry.info.time_limit_s) {
      r.passed = false;
      r.detail += " (time limit " + fixed(entry.info.time_limit_s, 0) +
                  " s exceeded)";
    }
    return r;
  }
  find_check(name);  // throws
  return {};
}

}  // namespace streamscope::suite
