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

#ifndef STREAMSCOPE_GRAPH_HPP_
#define STREAMSCOPE_GRAPH_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace streamscope {

// Vertices are labelled 1..n. Label 0 is never a valid vertex.
using VertexId = std::uint32_t;
using Weight = std::uint32_t;

// An undirected edge, stored with u < v. `weight` is 0 for unweighted graphs.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight weight = 0;

  static Edge make(VertexId a, VertexId b, Weight w = 0) {
    return a < b ? Edge{a, b, w} : Edge{b, a, w};
  }
  bool touches(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 1..n.
//
// Adjacency lists are kept sorted by label, which is the only order the
// canonical constructions depend on.
class Graph {
 public:
  Graph() = default;

  // Validates the simple-graph invariants; throws Error on violation.
  // `max_weight` of 0 means "infer from the edges" for weighted graphs.
  Graph(std::uint32_t n, std::vector<Edge> edges, bool weighted,
        Weight max_weight = 0);

  std::uint32_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  bool weighted() const { return weighted_; }
  // Largest admissible weight W (0 when unweighted).
  Weight max_weight() const { return max_weight_; }

  // Edges in construction order.
  std::span<const Edge> edges() const { return edges_; }

  // Neighbours of v in strictly ascending label order.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool has_edge(VertexId a, VertexId b) const;
  // Weight of edge {a,b}; the edge must exist.
  Weight weight(VertexId a, VertexId b) const;

 private:
  std::uint32_t n_ = 0;
  bool weighted_ = false;
  Weight max_weight_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<Weight> adjacency_weight_;
};

// Checked accessor; throws kLabelOutOfRange for v outside [1..n].
std::vector<VertexId> neighbors_sorted(const Graph& g, VertexId v);

// G_{|d}: drops every edge with an endpoint of degree > d. Same vertex set.
Graph truncate_high_degree(const Graph& g, std::size_t d);

// Subgraph with edges of weight <= t (the threshold graph G^(t)).
Graph threshold_graph(const Graph& g, Weight t);

struct LoadOptions {
  std::optional<std::uint32_t> n;
  std::optional<Weight> max_weight;
};

// Header line `n=<int>` optional; then "u v" or "u v w" per line, '#'
// comments and blank lines ignored. All lines must agree on weighted-ness.
Graph load_edge_list(std::istream& in, const LoadOptions& options = {});
Graph load_edge_list(std::string_view text, const LoadOptions& options = {});
Graph load_edge_list_file(const std::string& path,
                          const LoadOptions& options = {});

// One edge per line, smaller label first, lines sorted by (u, v), preceded
// by the `n=<int>` header.
std::string serialize_edge_list(const Graph& g);

// Reads only the optional `n=<int>` header of an edge-list file.
std::optional<std::uint32_t> peek_vertex_count(const std::string& path);

}  // namespace streamscope

#endif  // STREAMSCOPE_GRAPH_HPP_
