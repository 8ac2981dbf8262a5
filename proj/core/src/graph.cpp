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

#include "streamscope/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "streamscope/error.hpp"

namespace streamscope {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kLabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::kBadWeight: return "BadWeight";
    case ErrorCode::kUnweightedStream: return "UnweightedStream";
    case ErrorCode::kBadW: return "BadW";
    case ErrorCode::kOutOfOrderTimeStep: return "OutOfOrderTimeStep";
    case ErrorCode::kEdgeAlreadyInTree: return "EdgeAlreadyInTree";
    case ErrorCode::kEdgeAlreadyInDisc: return "EdgeAlreadyInDisc";
    case ErrorCode::kDiscTooLarge: return "DiscTooLarge";
    case ErrorCode::kRadiusMismatch: return "RadiusMismatch";
    case ErrorCode::kEmptyVertexSet: return "EmptyVertexSet";
    case ErrorCode::kAllEstimatesNonpositive: return "AllEstimatesNonpositive";
    case ErrorCode::kComponentTooLarge: return "ComponentTooLarge";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kTooManyEdges: return "TooManyEdges";
  }
  return "Unknown";
}

Graph::Graph(std::uint32_t n, std::vector<Edge> edges, bool weighted,
             Weight max_weight)
    : n_(n), weighted_(weighted), edges_(std::move(edges)) {
  Weight seen_max = 0;
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == 0 || e.v > n_) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") outside [1.." + std::to_string(n_) + "]");
    }
    if (weighted_) {
      if (e.weight == 0) {
        throw Error(ErrorCode::kBadWeight, "weights must be >= 1");
      }
      seen_max = std::max(seen_max, e.weight);
    } else {
      e.weight = 0;
    }
  }
  if (weighted_) {
    max_weight_ = max_weight == 0 ? std::max<Weight>(seen_max, 1) : max_weight;
    if (seen_max > max_weight_) {
      throw Error(ErrorCode::kBadWeight,
                  "weight " + std::to_string(seen_max) + " exceeds W=" +
                      std::to_string(max_weight_));
    }
  }

  std::vector<std::size_t> degree(static_cast<std::size_t>(n_) + 2, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(static_cast<std::size_t>(n_) + 2, 0);
  for (std::uint32_t v = 1; v <= n_; ++v) {
    offsets_[v + 1] = offsets_[v] + degree[v];
  }
  adjacency_.resize(2 * edges_.size());
  adjacency_weight_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end());
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.u]] = e.v;
    adjacency_weight_[cursor[e.u]++] = e.weight;
    adjacency_[cursor[e.v]] = e.u;
    adjacency_weight_[cursor[e.v]++] = e.weight;
  }
  std::vector<std::pair<VertexId, Weight>> scratch;
  for (std::uint32_t v = 1; v <= n_; ++v) {
    const std::size_t lo = offsets_[v], hi = offsets_[v + 1];
    scratch.clear();
    for (std::size_t i = lo; i < hi; ++i) {
      scratch.emplace_back(adjacency_[i], adjacency_weight_[i]);
    }
    std::sort(scratch.begin(), scratch.end());
    for (std::size_t i = lo; i < hi; ++i) {
      adjacency_[i] = scratch[i - lo].first;
      adjacency_weight_[i] = scratch[i - lo].second;
      if (i > lo && adjacency_[i] == adjacency_[i - 1]) {
        throw Error(ErrorCode::kDuplicateEdge,
                    "edge (" + std::to_string(std::min(v, adjacency_[i])) +
                        "," + std::to_string(std::max(v, adjacency_[i])) +
                        ") appears more than once");
      }
    }
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (v == 0 || v > n_) return {};
  return std::span<const VertexId>(adjacency_).subspan(
      offsets_[v], offsets_[v + 1] - offsets_[v]);
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

Weight Graph::weight(VertexId a, VertexId b) const {
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) {
    throw Error(ErrorCode::kInvalidArgument, "no such edge");
  }
  return adjacency_weight_[offsets_[a] + static_cast<std::size_t>(it - nb.begin())];
}

std::vector<VertexId> neighbors_sorted(const Graph& g, VertexId v) {
  if (v == 0 || v > g.n()) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "vertex " + std::to_string(v) + " not in [1.." +
                    std::to_string(g.n()) + "]");
  }
  auto nb = g.neighbors(v);
  return {nb.begin(), nb.end()};
}

Graph truncate_high_degree(const Graph& g, std::size_t d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "d must be >= 1");
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) <= d && g.degree(e.v) <= d) kept.push_back(e);
  }
  return Graph(g.n(), std::move(kept), g.weighted(), g.max_weight());
}

Graph threshold_graph(const Graph& g, Weight t) {
  if (!g.weighted()) {
    throw Error(ErrorCode::kUnweightedStream, "threshold graph needs weights");
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (e.weight <= t) kept.push_back(e);
  }
  return Graph(g.n(), std::move(kept), true, g.max_weight());
}

namespace {

bool parse_uint(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line_no) + ": " + what);
}

std::optional<std::uint32_t> parse_header(std::string_view line,
                                          std::size_t line_no) {
  auto tokens = split_ws(line);
  if (tokens.size() != 1 || !tokens[0].starts_with("n=")) return std::nullopt;
  std::uint64_t n = 0;
  if (!parse_uint(tokens[0].substr(2), n) || n > UINT32_MAX) {
    parse_fail(line_no, "bad vertex-count header");
  }
  return static_cast<std::uint32_t>(n);
}

}  // namespace

Graph load_edge_list(std::istream& in, const LoadOptions& options) {
  std::vector<Edge> edges;
  std::optional<std::uint32_t> header_n;
  std::optional<bool> weighted;
  std::uint64_t max_label = 0;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    auto tokens = split_ws(view);
    if (tokens.empty() || tokens[0].starts_with("#")) continue;
    if (!seen_content) {
      seen_content = true;
      if (auto n = parse_header(view, line_no)) {
        header_n = n;
        continue;
      }
    }
    if (tokens.size() != 2 && tokens.size() != 3) {
      parse_fail(line_no, "expected 'u v' or 'u v w'");
    }
    std::uint64_t a = 0, b = 0, w = 0;
    if (!parse_uint(tokens[0], a) || !parse_uint(tokens[1], b) ||
        a > UINT32_MAX || b > UINT32_MAX) {
      parse_fail(line_no, "vertex labels must be positive integers");
    }
    if (a == 0 || b == 0) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  "line " + std::to_string(line_no) + ": label 0");
    }
    const bool has_weight = tokens.size() == 3;
    if (weighted && *weighted != has_weight) {
      parse_fail(line_no, "mixed weighted and unweighted lines");
    }
    weighted = has_weight;
    if (has_weight) {
      if (!parse_uint(tokens[2], w) || w > UINT32_MAX) {
        parse_fail(line_no, "weight must be a non-negative integer");
      }
      if (w == 0 || (options.max_weight && w > *options.max_weight)) {
        throw Error(ErrorCode::kBadWeight,
                    "line " + std::to_string(line_no) + ": weight " +
                        std::to_string(w) + " outside [1..W]");
      }
    }
    if (a == b) {
      throw Error(ErrorCode::kSelfLoop,
                  "line " + std::to_string(line_no) + ": self-loop at " +
                      std::to_string(a));
    }
    max_label = std::max({max_label, a, b});
    edges.push_back(Edge::make(static_cast<VertexId>(a),
                               static_cast<VertexId>(b),
                               static_cast<Weight>(w)));
  }
  std::uint32_t n = static_cast<std::uint32_t>(max_label);
  if (options.n) {
    n = *options.n;
  } else if (header_n) {
    n = *header_n;
  }
  if (max_label > n) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "label " + std::to_string(max_label) + " exceeds n=" +
                    std::to_string(n));
  }
  return Graph(n, std::move(edges), weighted.value_or(false),
               options.max_weight.value_or(0));
}

Graph load_edge_list(std::string_view text, const LoadOptions& options) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in, options);
}

Graph load_edge_list_file(const std::string& path,
                          const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open " + path);
  }
  return load_edge_list(in, options);
}

std::optional<std::uint32_t> peek_vertex_count(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].starts_with("#")) continue;
    return parse_header(line, line_no);
  }
  return std::nullopt;
}

std::string serialize_edge_list(const Graph& g) {
  std::vector<Edge> sorted(g.edges().begin(), g.edges().end());
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  std::ostringstream out;
  out << "n=" << g.n() << '\n';
  for (const Edge& e : sorted) {
    out << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << e.weight;
    out << '\n';
  }
  return out.str();
}

}  // namespace streamscope
