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

#include "streamscope/report.hpp"

#include <json.hpp>

namespace streamscope {

namespace {

using Json = nlohmann::ordered_json;

Json params_json(const EstimatorParams& p, SampleMode mode) {
  Json j;
  j["tau"] = p.tau;
  j["s"] = p.s;
  j["k_max"] = p.k_max;
  j["epsilon"] = p.epsilon;
  j["rho"] = p.rho;
  j["delta"] = p.delta;
  j["seed"] = p.seed;
  j["sample_mode"] = to_string(mode);
  return j;
}

Json stats_json(const PassStats& s) {
  Json j;
  j["reads"] = s.reads;
  j["peak_slots"] = s.peak_slots;
  j["detectors"] = s.detectors;
  return j;
}

Json cc_json(const EstimateReport& r, std::uint32_t n) {
  Json j;
  j["algorithm"] = "num_cc";
  j["n"] = n;
  j["m"] = r.m_observed;
  j["params"] = params_json(r.params, r.sample_mode);
  Json per_k = Json::object();
  for (const auto& [k, c] : r.per_k) per_k[std::to_string(k)] = c;
  j["per_k"] = per_k;
  j["total"] = r.total;
  Json counts = Json::object();
  for (const auto& [k, x] : r.indicator_counts) counts[std::to_string(k)] = x;
  j["indicator_counts"] = counts;
  j["lambda"] = r.lambda;
  j["distinct_roots"] = r.distinct_roots;
  j["stats"] = stats_json(r.stats);
  return j;
}

Json disc_json(const DiscReport& r, std::uint32_t n) {
  Json j;
  j["algorithm"] = "num_disc";
  j["n"] = n;
  j["m"] = r.m_observed;
  Json params = params_json(r.params, r.sample_mode);
  params["k"] = r.k;
  params["d"] = r.d;
  j["params"] = params;
  Json per_type = Json::object();
  Json counts = Json::object();
  for (const auto& [type, c] : r.per_type) per_type[type.hex()] = c;
  for (const auto& [type, x] : r.indicator_counts) counts[type.hex()] = x;
  j["per_type"] = per_type;
  double total = 0.0;
  for (const auto& [type, c] : r.per_type) total += c;
  j["total"] = total;
  j["indicator_counts"] = counts;
  j["lambda"] = r.lambda;
  j["distinct_roots"] = r.distinct_roots;
  j["stats"] = stats_json(r.stats);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string report_json(const EstimateReport& report, std::uint32_t n) {
  return dump(cc_json(report, n));
}

std::string report_json(const MstReport& r, std::uint32_t n) {
  Json j;
  j["algorithm"] = "mst_weight";
  j["n"] = n;
  j["m"] = r.m_observed;
  Json params = params_json(r.params, r.thresholds.empty()
                                          ? SampleMode::kAuto
                                          : r.thresholds.front().sample_mode);
  params["W"] = r.max_weight;
  params["instance_epsilon"] = r.instance_epsilon;
  params["instance_rho"] = r.instance_rho;
  j["params"] = params;
  j["streamed"] = r.streamed;
  Json per_t = Json::object();
  for (std::size_t i = 0; i < r.thresholds.size(); ++i) {
    per_t[std::to_string(i + 1)] = r.thresholds[i].total;
  }
  j["per_threshold"] = per_t;
  j["total"] = r.estimate;
  Json detail = Json::array();
  for (const auto& t : r.thresholds) {
    Json inst;
    Json per_k = Json::object();
    Json counts = Json::object();
    for (const auto& [k, c] : t.per_k) per_k[std::to_string(k)] = c;
    for (const auto& [k, x] : t.indicator_counts) {
      counts[std::to_string(k)] = x;
    }
    inst["m"] = t.m_observed;
    inst["lambda"] = t.lambda;
    inst["per_k"] = per_k;
    inst["indicator_counts"] = counts;
    detail.push_back(inst);
  }
  j["thresholds"] = detail;
  j["stats"] = stats_json(r.stats);
  return dump(j);
}

std::string report_json(const DiscReport& report, std::uint32_t n) {
  return dump(disc_json(report, n));
}

std::string report_json(const DiscReport& discs, const MisEstimate& mis,
                        std::uint32_t n) {
  Json j;
  j["algorithm"] = "mis_estimate";
  j["n"] = n;
  j["oracle"] = mis.oracle;
  j["samples"] = mis.samples;
  j["accepted"] = mis.accepted;
  j["total"] = mis.estimate;
  j["discs"] = disc_json(discs, n);
  return dump(j);
}

}  // namespace streamscope
