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

#ifndef STREAMSCOPE_CANONICAL_HPP_
#define STREAMSCOPE_CANONICAL_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "streamscope/graph.hpp"

namespace streamscope {

inline constexpr std::uint32_t kNoIndex =
    std::numeric_limits<std::uint32_t>::max();

// A directed record of an insertion: `from` was already present, `to` is the
// other endpoint.
struct Arc {
  VertexId from = 0;
  VertexId to = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Rooted tree grown one leaf at a time. Index 0 is the root; all per-vertex
// vectors are indexed by insertion position.
class RootedTree {
 public:
  RootedTree() = default;
  explicit RootedTree(VertexId root) { reset(root); }

  void reset(VertexId root);

  VertexId root() const { return vertices_.front(); }
  std::size_t size() const { return vertices_.size(); }
  std::uint32_t max_depth() const { return max_depth_; }

  // Insertion position of v or kNoIndex.
  std::uint32_t index_of(VertexId v) const {
    for (std::uint32_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i] == v) return i;
    }
    return kNoIndex;
  }
  bool contains(VertexId v) const { return index_of(v) != kNoIndex; }
  std::uint32_t depth_at(std::uint32_t i) const { return depth_[i]; }
  std::uint32_t depth(VertexId v) const { return depth_[index_of(v)]; }
  VertexId vertex_at(std::uint32_t i) const { return vertices_[i]; }
  std::uint32_t parent_at(std::uint32_t i) const { return parent_[i]; }

  // Largest label among the children of the vertex at position i, or 0.
  VertexId max_child_label(std::uint32_t i) const;

  // Adds `child` below the vertex at position `parent_index`.
  void attach(std::uint32_t parent_index, VertexId child);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  // (parent, child) in insertion order.
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_edge(VertexId a, VertexId b) const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> parent_;
  std::vector<Arc> arcs_;
  std::uint32_t max_depth_ = 0;
};

// Rooted graph with shortest-path depths to the root. Index 0 is the root.
class RootedDisc {
 public:
  RootedDisc() = default;
  explicit RootedDisc(VertexId root) { reset(root); }

  void reset(VertexId root);

  VertexId root() const { return vertices_.front(); }
  std::size_t size() const { return vertices_.size(); }
  std::size_t num_edges() const { return arcs_.size(); }
  std::uint32_t radius() const { return max_depth_; }
  std::size_t max_degree() const;

  std::uint32_t index_of(VertexId v) const {
    for (std::uint32_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i] == v) return i;
    }
    return kNoIndex;
  }
  bool contains(VertexId v) const { return index_of(v) != kNoIndex; }
  VertexId vertex_at(std::uint32_t i) const { return vertices_[i]; }
  std::uint32_t depth_at(std::uint32_t i) const { return depth_[i]; }
  std::uint32_t depth(VertexId v) const { return depth_[index_of(v)]; }
  std::size_t degree_at(std::uint32_t i) const { return adjacency_[i].size(); }
  const std::vector<std::uint32_t>& neighbors_at(std::uint32_t i) const {
    return adjacency_[i];
  }
  bool has_edge(VertexId a, VertexId b) const;

  // Largest label among neighbours one level deeper than position i, or 0.
  VertexId max_child_label(std::uint32_t i) const;

  // Adds a new vertex adjacent to position `from` (depth = depth(from) + 1).
  std::uint32_t attach(std::uint32_t from, VertexId v);
  // Adds an edge between two present vertices whose depths differ by at
  // most one, so no depth changes.
  void link(std::uint32_t a, std::uint32_t b);
  // Raw construction from foreign data (decoding, projection, induced
  // discs): depths are stale until refresh_depths() is called.
  std::uint32_t add_vertex(VertexId v);
  void add_edge(std::uint32_t a, std::uint32_t b);

  // BFS distances from the root recomputed from scratch; unreachable
  // vertices get kNoIndex.
  std::vector<std::uint32_t> bfs_depths() const;
  void refresh_depths();
  bool depths_consistent() const { return bfs_depths() == depth_; }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<Arc> arcs_;
  std::uint32_t max_depth_ = 0;
};

// Canonical BFS tree of v up to k vertices: FIFO queue, neighbours in
// ascending label order, stop as soon as k vertices are present.
RootedTree cbfs_tree(const Graph& g, VertexId v, std::size_t k);
// Insertion order of a tree's edges.
std::vector<Edge> cbfs_edge_order(const RootedTree& t);

// Violating-edge predicates. Throw kEdgeAlreadyInTree / kEdgeAlreadyInDisc
// when e is already part of the structure.
bool is_violating_tree(const RootedTree& t, const Edge& e);
bool is_violating_disc(const RootedDisc& f, const Edge& e);

namespace detail {
// Unchecked forms used on the detector hot path. Edges of a simple-graph
// stream are distinct, so membership never needs re-checking there.
bool violates(const RootedTree& t, VertexId a, VertexId b);
bool violates(const RootedDisc& f, VertexId a, VertexId b);
}  // namespace detail

// Canonical extended (d+1)-bounded k-disc of v. Every vertex is expanded at
// most once; a popped vertex scans its neighbours in ascending label order
// and adds an edge while both endpoints have disc-degree below d+1 and the
// radius stays within k.
RootedDisc cano_disc(const Graph& g, VertexId v, std::size_t k, std::size_t d);
std::vector<Edge> disc_edge_order(const RootedDisc& f);

// Subgraph rooted at v induced by all vertices within distance k in g.
// disc_{k,d}(v, G) is induced_disc(truncate_high_degree(G, d), v, k).
RootedDisc induced_disc(const Graph& g, VertexId v, std::size_t k);

// Root-preserving isomorphism class of a small rooted graph.
struct DiscType {
  std::string code;  // canonical bytes
  std::uint32_t num_vertices = 0;
  std::uint32_t num_edges = 0;

  std::string hex() const;
  static DiscType from_hex(const std::string& hex);

  friend bool operator==(const DiscType& a, const DiscType& b) {
    return a.code == b.code;
  }
  friend std::strong_ordering operator<=>(const DiscType& a,
                                          const DiscType& b) {
    return a.code <=> b.code;
  }
};

inline constexpr std::size_t kDefaultDiscVertexCap = 64;

DiscType disc_code(const RootedDisc& f,
                   std::size_t max_vertices = kDefaultDiscVertexCap);
// Representative rooted graph of a type; the root is labelled 1 and the
// other vertices 2..N in canonical order.
RootedDisc decode_disc(const DiscType& type);
DiscType singleton_disc_type();

// Canonical code of an unrooted graph (isomorphism-class key).
std::string graph_code(const Graph& g);
// Relabels g so its labels follow the canonical order.
Graph canonical_relabel(const Graph& g);

// Recovers the d-bounded k-disc from an extended disc built at radius k+1
// with cap d+1: vertices of disc-degree >= d+1 are high-degree, their edges
// are dropped, and the result is the part within distance k of the root.
RootedDisc project_extended_disc_graph(const RootedDisc& gamma, std::size_t k,
                                       std::size_t d);
DiscType project_extended_disc(const RootedDisc& gamma, std::size_t k,
                               std::size_t d);

namespace testing {
// Meta-testing hook: shifts the depth-gap threshold of both violating-edge
// predicates from 2 to 3 (a deliberate off-by-one).
void set_depth_gap_mutation(bool enabled);
bool depth_gap_mutation();
}  // namespace testing

}  // namespace streamscope

#endif  // STREAMSCOPE_CANONICAL_HPP_
