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

// streamscope command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "streamscope/canonical.hpp"
#include "streamscope/corpus.hpp"
#include "streamscope/error.hpp"
#include "streamscope/estimators.hpp"
#include "streamscope/graph.hpp"
#include "streamscope/report.hpp"
#include "streamscope/stream.hpp"
#include "streamscope/suite.hpp"
#include "streamscope/verify.hpp"

namespace ss = streamscope;
using Json = nlohmann::ordered_json;

namespace {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kConfigError = 2,
  kInputError = 3,
  kWeightError = 4,
  kComponentTooLarge = 5,
};

int exit_code_for(ss::ErrorCode code) {
  switch (code) {
    case ss::ErrorCode::kInvalidArgument:
    case ss::ErrorCode::kBadW:
      return kConfigError;
    case ss::ErrorCode::kBadWeight:
      return kWeightError;
    case ss::ErrorCode::kComponentTooLarge:
      return kComponentTooLarge;
    default:
      return kInputError;
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("STREAMSCOPE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ss::Error(ss::ErrorCode::kInvalidArgument,
                      "STREAMSCOPE_SEED is not an unsigned integer");
    }
  }
  return 0;
}

struct RunConfig {
  std::string input;
  std::uint32_t n = 0;
  double tau = 0.1;
  std::uint64_t samples = 1000;
  std::size_t k_max = 0;  // 0: derive from epsilon, else 8
  std::size_t k = 1;
  std::size_t d = 2;
  ss::Weight W = 0;
  double epsilon = 0.0;
  double rho = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::string out;
  bool exact = false;
  std::string stream_order = "shuffled";
  std::string sample_mode = "auto";
  std::uint64_t mis_samples = 500;
  std::size_t mis_component_cap = 24;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ss::Error(ss::ErrorCode::kInvalidArgument,
                    "cannot write " + path);
  }
  out << text;
}

ss::EstimatorParams params_of(const RunConfig& c) {
  ss::EstimatorParams p;
  p.tau = c.tau;
  p.s = c.samples;
  p.k_max = c.k_max;
  if (p.k_max == 0) {
    p.k_max = c.epsilon > 0.0
                  ? static_cast<std::size_t>(std::ceil(2.0 / c.epsilon))
                  : 8;
  }
  p.epsilon = c.epsilon;
  p.rho = c.rho;
  p.delta = c.delta;
  p.seed = c.seed;
  if (c.sample_mode == "with") {
    p.sample_mode = ss::SampleMode::kWithReplacement;
  } else if (c.sample_mode == "without") {
    p.sample_mode = ss::SampleMode::kWithoutReplacement;
  }
  ss::validate(p);
  return p;
}

ss::Graph load(const RunConfig& c, std::optional<ss::Weight> W = {}) {
  ss::LoadOptions options;
  options.n = c.n;
  options.max_weight = W;
  return ss::load_edge_list_file(c.input, options);
}

// Streams the input: shuffled (materialises, then permutes) or in file
// order without materialising.
template <typename Fn>
auto with_source(const RunConfig& c, std::optional<ss::Weight> W, Fn&& fn) {
  if (c.stream_order == "given") {
    ss::EdgeListFileSource source(c.input, c.n, W);
    return fn(static_cast<ss::EdgeSource&>(source));
  }
  const ss::Graph g = load(c, W);
  const ss::EdgeStream stream =
      ss::shuffle_stream(g, ss::derive_seed(c.seed, "stream"));
  ss::MaterializedSource source(stream);
  return fn(static_cast<ss::EdgeSource&>(source));
}

Json histogram_json(const std::map<std::size_t, std::uint64_t>& hist) {
  Json j = Json::object();
  for (const auto& [k, count] : hist) j[std::to_string(k)] = count;
  return j;
}

int run_cc(const RunConfig& c) {
  if (c.exact) {
    const ss::Graph g = load(c);
    Json j;
    j["algorithm"] = "exact_cc";
    j["n"] = g.n();
    j["m"] = g.m();
    const auto hist = ss::exact_cc_histogram(g);
    j["per_k"] = histogram_json(hist);
    j["total"] = ss::count_components(g);
    write_output(c.out, j.dump(2) + "\n");
    return kOk;
  }
  const ss::EstimatorParams params = params_of(c);
  const auto report = with_source(c, std::nullopt, [&](ss::EdgeSource& src) {
    return ss::num_cc(src, c.n, params);
  });
  write_output(c.out, ss::report_json(report, c.n));
  return kOk;
}

int run_mst(const RunConfig& c) {
  std::optional<ss::Weight> W;
  if (c.W > 0) W = c.W;
  if (c.exact || c.stream_order != "given") {
    // Loading validates every weight against W when W is given.
    const ss::Graph g = load(c, W);
    if (!g.weighted()) {
      throw ss::Error(ss::ErrorCode::kUnweightedStream,
                      "MST needs a weighted edge list");
    }
    const ss::Weight max_weight = W.value_or(g.max_weight());
    if (c.exact) {
      Json j;
      j["algorithm"] = "exact_mst";
      j["n"] = g.n();
      j["m"] = g.m();
      j["W"] = max_weight;
      Json per_t = Json::object();
      std::int64_t identity =
          static_cast<std::int64_t>(g.n()) - static_cast<std::int64_t>(max_weight);
      for (ss::Weight t = 1; t < max_weight; ++t) {
        const auto c_t = ss::count_components(ss::threshold_graph(g, t));
        per_t[std::to_string(t)] = c_t;
        identity += static_cast<std::int64_t>(c_t);
      }
      j["per_threshold"] = per_t;
      j["total"] = identity;
      j["kruskal"] = ss::kruskal_mst(g);
      write_output(c.out, j.dump(2) + "\n");
      return kOk;
    }
    const ss::EstimatorParams params = params_of(c);
    const ss::EdgeStream stream =
        ss::shuffle_stream(g, ss::derive_seed(c.seed, "stream"));
    const auto report = ss::mst_weight(stream, g.n(), max_weight, params);
    write_output(c.out, ss::report_json(report, g.n()));
    return kOk;
  }
  if (!W) {
    throw ss::Error(ss::ErrorCode::kBadW,
                    "--W is required with --stream-order given");
  }
  const ss::EstimatorParams params = params_of(c);
  ss::EdgeListFileSource source(c.input, c.n, W);
  const auto report = ss::mst_weight(source, c.n, *W, params);
  write_output(c.out, ss::report_json(report, c.n));
  return kOk;
}

Json disc_histogram_json(const std::map<ss::DiscType, std::uint64_t>& hist) {
  Json j = Json::object();
  for (const auto& [type, count] : hist) j[type.hex()] = count;
  return j;
}

int run_disc(const RunConfig& c) {
  if (c.exact) {
    const ss::Graph g = load(c);
    const auto freq = ss::exact_disc_freq(g, c.k, c.d);
    Json j;
    j["algorithm"] = "exact_disc";
    j["n"] = g.n();
    j["m"] = g.m();
    j["k"] = c.k;
    j["d"] = c.d;
    j["per_type"] = disc_histogram_json(freq.extended);
    j["projected"] = disc_histogram_json(freq.projected);
    write_output(c.out, j.dump(2) + "\n");
    return kOk;
  }
  const ss::EstimatorParams params = params_of(c);
  const auto report = with_source(c, std::nullopt, [&](ss::EdgeSource& src) {
    return ss::num_disc(src, c.n, c.k, c.d, params);
  });
  write_output(c.out, ss::report_json(report, c.n));
  return kOk;
}

int run_mis(const RunConfig& c) {
  if (c.exact) {
    const ss::Graph g = load(c);
    const auto mis = ss::exact_mis(g, c.mis_component_cap);
    Json j;
    j["algorithm"] = "exact_mis";
    j["n"] = g.n();
    j["m"] = g.m();
    j["total"] = mis.size;
    j["witness"] = mis.witness;
    write_output(c.out, j.dump(2) + "\n");
    return kOk;
  }
  const ss::EstimatorParams params = params_of(c);
  const auto discs = with_source(c, std::nullopt, [&](ss::EdgeSource& src) {
    return ss::num_disc(src, c.n, c.k + 1, c.d, params);
  });
  // The reference oracle answers from the whole graph.
  const ss::Graph g = load(c);
  const ss::ReferenceMisOracle oracle(g, c.mis_component_cap);
  const auto mis = ss::mis_estimate(discs, c.n, c.d, c.k, c.mis_samples,
                                    oracle, ss::derive_seed(c.seed, "mis"));
  write_output(c.out, ss::report_json(discs, mis, c.n));
  return kOk;
}

struct VerifyConfig {
  std::vector<std::string> only;
  bool full = false;
  std::string mutate;
  unsigned jobs = 1;
  std::optional<std::uint64_t> seed;
};

int run_verify(const VerifyConfig& v) {
  if (!v.mutate.empty()) {
    if (v.mutate != "depth-gap") {
      throw ss::Error(ss::ErrorCode::kInvalidArgument,
                      "unknown mutation '" + v.mutate + "'");
    }
    ss::testing::set_depth_gap_mutation(true);
  }
  ss::suite::Options options;
  options.scale = v.full ? ss::suite::Scale::kFull : ss::suite::Scale::kQuick;
  options.jobs = v.jobs;
  if (v.seed) options.seed = *v.seed;

  std::vector<std::string> names = v.only;
  for (const auto& name : names) ss::suite::find_check(name);
  if (names.empty()) {
    for (const auto& info : ss::suite::checks()) {
      if (v.full || info.invariant) names.emplace_back(info.name);
    }
  }
  int failed = 0;
  for (const auto& name : names) {
    const auto r = ss::suite::run_check(name, options);
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " ("
              << static_cast<long long>(r.seconds * 1000) << " ms): "
              << r.detail << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (names.size() - failed) << "/" << names.size()
            << " checks passed" << std::endl;
  return failed == 0 ? kOk : kVerifyFailed;
}

struct ParamsConfig {
  double epsilon = 0.0;
  double rho = 0.0;
  std::optional<double> delta;
  std::size_t k = 1;
  std::size_t d = 2;
  double types = 1.0;
};

int run_params(const ParamsConfig& p) {
  const auto a = ss::asymptotic_parameters(p.epsilon, p.rho);
  Json j;
  j["epsilon"] = p.epsilon;
  j["rho"] = p.rho;
  j["k_max"] = static_cast<std::size_t>(std::ceil(2.0 / p.epsilon));
  j["log10_tau"] = a.log10_tau;
  j["log10_s"] = a.log10_s;
  if (p.delta) {
    j["disc"] = {{"k", p.k},
                 {"d", p.d},
                 {"delta", *p.delta},
                 {"types", p.types},
                 {"log10_tau",
                  ss::asymptotic_disc_log10_tau(p.rho, *p.delta, p.k, p.d,
                                                p.types)}};
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

struct GenerateConfig {
  std::string corpus;
  std::uint32_t n = 0;
  std::size_t m = 0;
  std::uint32_t max_size = 6;
  ss::Weight W = 1;
  std::uint64_t seed = 0;
  std::string out;
};

int run_generate(const GenerateConfig& c) {
  ss::Rng rng(ss::derive_seed(c.seed, "generate"));
  ss::Graph g;
  if (c.corpus == "components") {
    g = ss::corpus::component_corpus();
  } else if (c.corpus == "mst-path") {
    g = ss::corpus::mst_path_corpus();
  } else if (c.corpus == "discs") {
    g = ss::corpus::disc_corpus();
  } else if (c.corpus == "small-components") {
    g = ss::corpus::small_components(c.n, c.max_size, rng);
  } else if (c.corpus == "padded") {
    g = ss::corpus::padded_corpus(c.m);
  } else if (c.corpus == "gnm") {
    g = ss::corpus::random_gnm(c.n, c.m, rng);
  } else if (c.corpus == "connected-weighted") {
    g = ss::corpus::random_connected_weighted(c.n, c.m, c.W, rng);
  } else if (c.corpus == "path") {
    g = ss::corpus::path(c.n);
  } else if (c.corpus == "matching") {
    g = ss::corpus::repeat(ss::corpus::path(2), c.n / 2);
  } else if (c.corpus == "empty") {
    g = ss::corpus::empty_graph(c.n);
  } else {
    throw ss::Error(ss::ErrorCode::kInvalidArgument,
                    "unknown corpus '" + c.corpus + "'");
  }
  write_output(c.out, ss::serialize_edge_list(g));
  return kOk;
}

const auto kProbability = CLI::Validator(
    [](std::string& s) -> std::string {
      try {
        const double x = std::stod(s);
        if (x > 0.0 && x < 1.0) return {};
      } catch (const std::exception&) {
      }
      return "must be a number in (0,1)";
    },
    "(0,1)");

void add_run_flags(CLI::App* cmd, RunConfig& c, bool needs_kd) {
  cmd->add_option("--input", c.input, "edge-list file")->required();
  cmd->add_option("--n", c.n, "number of vertices")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tau", c.tau, "phase probability")->check(kProbability);
  cmd->add_option("--samples", c.samples, "root sample size")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--kmax", c.k_max, "largest component size counted")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--epsilon", c.epsilon, "target accuracy")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--rho", c.rho)->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--delta", c.delta)->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--seed", c.seed, "master seed (default STREAMSCOPE_SEED)");
  cmd->add_option("--out", c.out, "report path (default stdout)");
  cmd->add_flag("--exact", c.exact, "emit the exact answer instead");
  cmd->add_option("--stream-order", c.stream_order)
      ->check(CLI::IsMember({"shuffled", "given"}));
  cmd->add_option("--sample-mode", c.sample_mode)
      ->check(CLI::IsMember({"auto", "with", "without"}));
  if (needs_kd) {
    cmd->add_option("--k", c.k, "disc radius")->required();
    cmd->add_option("--d", c.d, "degree bound")
        ->required()
        ->check(CLI::PositiveNumber);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-order graph stream estimators"};
  app.require_subcommand(1);

  RunConfig cc, mst, disc, mis;
  VerifyConfig verify;
  ParamsConfig params;
  GenerateConfig generate;

  try {
    const std::uint64_t seed = default_seed();
    cc.seed = mst.seed = disc.seed = mis.seed = generate.seed = seed;
    if (std::getenv("STREAMSCOPE_SEED")) verify.seed = seed;
  } catch (const ss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }

  auto* run_cc_cmd = app.add_subcommand("run-cc", "estimate component count");
  add_run_flags(run_cc_cmd, cc, false);

  auto* run_mst_cmd = app.add_subcommand("run-mst", "estimate MST weight");
  add_run_flags(run_mst_cmd, mst, false);
  run_mst_cmd->add_option("--W", mst.W, "largest edge weight")
      ->check(CLI::PositiveNumber);

  auto* run_disc_cmd =
      app.add_subcommand("run-disc", "estimate disc type frequencies");
  add_run_flags(run_disc_cmd, disc, true);

  auto* run_mis_cmd =
      app.add_subcommand("run-mis", "estimate maximum independent set size");
  add_run_flags(run_mis_cmd, mis, true);
  run_mis_cmd->add_option("--mis-samples", mis.mis_samples)
      ->check(CLI::PositiveNumber);
  run_mis_cmd->add_option("--mis-component-cap", mis.mis_component_cap)
      ->check(CLI::Range(1, 64));

  auto* verify_cmd = app.add_subcommand("verify", "run the check suite");
  verify_cmd->add_option("--only", verify.only, "run only these checks");
  verify_cmd->add_flag("--full", verify.full,
                       "all checks at acceptance scale");
  verify_cmd->add_option("--mutate", verify.mutate,
                         "inject a known defect (depth-gap)");
  verify_cmd->add_option("--jobs", verify.jobs)->check(CLI::Range(1, 256));
  verify_cmd->add_option("--seed", verify.seed);

  auto* params_cmd =
      app.add_subcommand("params", "asymptotic parameter settings (log10)");
  params_cmd->add_option("--epsilon", params.epsilon)
      ->required()
      ->check(CLI::Range(0.0, 0.5));
  params_cmd->add_option("--rho", params.rho)
      ->required()
      ->check(CLI::Range(0.0, 0.5));
  params_cmd->add_option("--delta", params.delta);
  params_cmd->add_option("--k", params.k);
  params_cmd->add_option("--d", params.d)->check(CLI::PositiveNumber);
  params_cmd->add_option("--types", params.types)->check(CLI::PositiveNumber);

  auto* generate_cmd = app.add_subcommand("generate", "write a test corpus");
  generate_cmd->add_option("--corpus", generate.corpus)
      ->required()
      ->check(CLI::IsMember({"components", "mst-path", "discs",
                             "small-components", "padded", "gnm",
                             "connected-weighted", "path", "matching",
                             "empty"}));
  generate_cmd->add_option("--n", generate.n);
  generate_cmd->add_option("--m", generate.m);
  generate_cmd->add_option("--max-size", generate.max_size)
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--W", generate.W)->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", generate.seed);
  generate_cmd->add_option("--out", generate.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*run_cc_cmd) return run_cc(cc);
    if (*run_mst_cmd) return run_mst(mst);
    if (*run_disc_cmd) return run_disc(disc);
    if (*run_mis_cmd) return run_mis(mis);
    if (*verify_cmd) return run_verify(verify);
    if (*params_cmd) return run_params(params);
    if (*generate_cmd) return run_generate(generate);
  } catch (const ss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kConfigError;
}
