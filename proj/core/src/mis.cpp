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

#include <algorithm>
#include <optional>
#include <string>

#include "streamscope/error.hpp"
#include "streamscope/estimators.hpp"
#include "streamscope/verify.hpp"

namespace streamscope {

ReferenceMisOracle::ReferenceMisOracle(const Graph& g,
                                       std::size_t component_cap)
    : graph_(g),
      component_cap_(std::min<std::size_t>(component_cap, 64)),
      in_set_(g.n() + 1, -1) {}

bool ReferenceMisOracle::contains_root(VertexId root,
                                       const RootedDisc& /*part*/) const {
  if (root < 1 || root > graph_.n()) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "root " + std::to_string(root) + " not in graph");
  }
  if (in_set_[root] >= 0) return in_set_[root] == 1;

  std::vector<VertexId> members{root};
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (VertexId w : graph_.neighbors(members[head])) {
      if (std::find(members.begin(), members.end(), w) != members.end()) {
        continue;
      }
      members.push_back(w);
      if (members.size() > component_cap_) {
        throw Error(ErrorCode::kComponentTooLarge,
                    "component of vertex " + std::to_string(root) +
                        " exceeds the cap of " +
                        std::to_string(component_cap_));
      }
    }
  }
  std::sort(members.begin(), members.end());
  std::vector<std::uint64_t> adj(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (VertexId w : graph_.neighbors(members[i])) {
      const auto j = std::lower_bound(members.begin(), members.end(), w) -
                     members.begin();
      adj[i] |= std::uint64_t{1} << j;
    }
  }
  for (VertexId v : members) in_set_[v] = 0;
  for (std::uint32_t i : detail::lexmin_mis(adj)) in_set_[members[i]] = 1;
  return in_set_[root] == 1;
}

MisEstimate mis_estimate(const DiscReport& report, std::uint32_t n,
                         std::size_t d, std::size_t k, std::uint64_t samples,
                         const RootMembershipOracle& oracle,
                         std::uint64_t seed) {
  if (samples < 1) {
    throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");
  }
  if (report.k != k + 1 || report.d != d) {
    throw Error(ErrorCode::kInvalidArgument,
                "disc report must be built with radius k+1 and the same d");
  }
  std::vector<const DiscType*> types;
  std::vector<const std::vector<VertexId>*> witnesses;
  std::vector<double> cumulative;
  double total = 0.0;
  for (const auto& [type, estimate] : report.per_type) {
    if (!(estimate > 0.0)) continue;
    const auto it = report.witnesses.find(type);
    if (it == report.witnesses.end() || it->second.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "disc type " + type.hex() + " has no witness root");
    }
    total += estimate;
    types.push_back(&type);
    witnesses.push_back(&it->second);
    cumulative.push_back(total);
  }
  if (types.empty()) {
    throw Error(ErrorCode::kAllEstimatesNonpositive,
                "no disc type has a positive frequency estimate");
  }

  std::vector<std::optional<RootedDisc>> parts(types.size());
  Rng rng(derive_seed(seed, "mis-sample"));
  MisEstimate out;
  out.samples = samples;
  out.oracle = oracle.name();
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double u = rng.uniform01() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t idx = std::min<std::size_t>(
        static_cast<std::size_t>(it - cumulative.begin()), types.size() - 1);
    const auto& pool = *witnesses[idx];
    const VertexId root = pool[rng.uniform_index(pool.size())];
    if (!parts[idx]) {
      parts[idx] = project_extended_disc_graph(decode_disc(*types[idx]), k, d);
    }
    if (oracle.contains_root(root, *parts[idx])) ++out.accepted;
  }
  out.estimate = static_cast<double>(out.accepted) /
                 static_cast<double>(samples) * static_cast<double>(n);
  return out;
}

}  // namespace streamscope
