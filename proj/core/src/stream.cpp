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

#include "streamscope/stream.hpp"

#include <charconv>
#include <string_view>

#include "streamscope/error.hpp"

namespace streamscope {

EdgeStream EdgeStream::from_edges(std::span<const Edge> edges, bool weighted,
                                  Weight max_weight) {
  std::vector<StreamItem> items;
  items.reserve(edges.size());
  TimeStep t = 0;
  for (const Edge& e : edges) items.push_back({e, ++t});
  return EdgeStream(std::move(items), weighted, max_weight);
}

EdgeStream shuffle_stream(const Graph& g, std::uint64_t seed) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  Rng rng(seed);
  fisher_yates(std::span<Edge>(edges), rng);
  return EdgeStream::from_edges(edges, g.weighted(), g.max_weight());
}

EdgeStream given_order_stream(const Graph& g) {
  return EdgeStream::from_edges(g.edges(), g.weighted(), g.max_weight());
}

PhaseCoin::PhaseCoin(double tau, std::uint64_t seed) : tau_(tau), rng_(seed) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tau must lie in (0,1)");
  }
}

PhaseThreshold sample_lambda_online(std::uint64_t m, double tau,
                                    std::uint64_t seed) {
  PhaseCoin coin(tau, seed);
  for (std::uint64_t i = 0; i < m; ++i) coin.flip();
  return coin.threshold();
}

EdgeStream threshold_view(const EdgeStream& stream, Weight t) {
  if (!stream.weighted()) {
    throw Error(ErrorCode::kUnweightedStream,
                "threshold view needs a weighted stream");
  }
  std::vector<StreamItem> items;
  TimeStep time = 0;
  for (const StreamItem& item : stream.items()) {
    if (item.edge.weight <= t) items.push_back({item.edge, ++time});
  }
  return EdgeStream(std::move(items), true, stream.max_weight());
}

EdgeListFileSource::EdgeListFileSource(const std::string& path,
                                       std::uint32_t n,
                                       std::optional<Weight> max_weight)
    : in_(path), n_(n), max_weight_(max_weight.value_or(0)) {
  if (!in_) throw Error(ErrorCode::kParseError, "cannot open " + path);
  // Weighted-ness is decided by the first edge line.
  pending_ = read_one();
  if (pending_) {
    weighted_ = pending_->edge.weight != 0;
  }
  if (weighted_ && !max_weight) {
    throw Error(ErrorCode::kBadW,
                "streaming a weighted file in given order requires W up front");
  }
  if (pending_ && weighted_ && pending_->edge.weight > max_weight_) {
    throw Error(ErrorCode::kBadWeight, "weight outside [1..W]");
  }
}

std::optional<StreamItem> EdgeListFileSource::read_one() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    std::string_view view(line);
    const auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || view[first] == '#') continue;
    if (view.substr(first).starts_with("n=")) continue;
    std::uint64_t values[3] = {0, 0, 0};
    int count = 0;
    std::size_t i = first;
    while (i < view.size()) {
      while (i < view.size() && (view[i] == ' ' || view[i] == '\t' ||
                                 view[i] == '\r')) {
        ++i;
      }
      if (i >= view.size()) break;
      if (count == 3) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no_) + ": too many fields");
      }
      auto [ptr, ec] =
          std::from_chars(view.data() + i, view.data() + view.size(),
                          values[count]);
      if (ec != std::errc() ||
          (ptr != view.data() + view.size() && *ptr != ' ' && *ptr != '\t' &&
           *ptr != '\r')) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no_) + ": bad integer");
      }
      i = static_cast<std::size_t>(ptr - view.data());
      ++count;
    }
    if (count < 2) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no_) + ": expected 'u v [w]'");
    }
    if (values[0] == 0 || values[1] == 0 || values[0] > n_ || values[1] > n_) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  "line " + std::to_string(line_no_) + ": label outside [1..n]");
    }
    if (values[0] == values[1]) {
      throw Error(ErrorCode::kSelfLoop,
                  "line " + std::to_string(line_no_) + ": self-loop");
    }
    if (count == 3 && values[2] == 0) {
      throw Error(ErrorCode::kBadWeight,
                  "line " + std::to_string(line_no_) + ": weight 0");
    }
    return StreamItem{Edge::make(static_cast<VertexId>(values[0]),
                                 static_cast<VertexId>(values[1]),
                                 static_cast<Weight>(values[2])),
                      0};
  }
  return std::nullopt;
}

std::optional<StreamItem> EdgeListFileSource::next() {
  std::optional<StreamItem> item;
  if (pending_) {
    item = pending_;
    pending_.reset();
  } else {
    item = read_one();
  }
  if (!item) return std::nullopt;
  if ((item->edge.weight != 0) != weighted_) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_no_) +
                    ": mixed weighted and unweighted lines");
  }
  if (weighted_ && item->edge.weight > max_weight_) {
    throw Error(ErrorCode::kBadWeight,
                "line " + std::to_string(line_no_) + ": weight outside [1..W]");
  }
  item->time = ++time_;
  return item;
}

std::optional<StreamItem> CountingSource::next() {
  if (exhausted_) {
    throw Error(ErrorCode::kOutOfOrderTimeStep,
                "stream read after it was exhausted");
  }
  auto item = inner_.next();
  if (!item) {
    exhausted_ = true;
    return item;
  }
  if (item->time != reads_ + 1) {
    throw Error(ErrorCode::kOutOfOrderTimeStep,
                "expected time-step " + std::to_string(reads_ + 1) + ", got " +
                    std::to_string(item->time));
  }
  ++reads_;
  return item;
}

}  // namespace streamscope
