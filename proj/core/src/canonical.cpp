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

#include "streamscope/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <stdexcept>
#include <string>

#include "streamscope/error.hpp"

namespace streamscope {
namespace {

std::atomic<std::uint32_t> g_depth_gap{2};

std::uint32_t depth_gap() {
  return g_depth_gap.load(std::memory_order_relaxed);
}

std::string edge_str(VertexId a, VertexId b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

namespace testing {
void set_depth_gap_mutation(bool enabled) {
  g_depth_gap.store(enabled ? 3 : 2, std::memory_order_relaxed);
}
bool depth_gap_mutation() { return depth_gap() != 2; }
}  // namespace testing

// ---- RootedTree ------------------------------------------------------------

void RootedTree::reset(VertexId root) {
  vertices_.assign(1, root);
  depth_.assign(1, 0);
  parent_.assign(1, kNoIndex);
  arcs_.clear();
  max_depth_ = 0;
}

VertexId RootedTree::max_child_label(std::uint32_t i) const {
  VertexId best = 0;
  for (std::uint32_t j = 1; j < vertices_.size(); ++j) {
    if (parent_[j] == i) best = std::max(best, vertices_[j]);
  }
  return best;
}

void RootedTree::attach(std::uint32_t parent_index, VertexId child) {
  const std::uint32_t d = depth_[parent_index] + 1;
  arcs_.push_back({vertices_[parent_index], child});
  vertices_.push_back(child);
  depth_.push_back(d);
  parent_.push_back(parent_index);
  max_depth_ = std::max(max_depth_, d);
}

bool RootedTree::has_edge(VertexId a, VertexId b) const {
  return std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& arc) {
    return (arc.from == a && arc.to == b) || (arc.from == b && arc.to == a);
  });
}

// ---- RootedDisc ------------------------------------------------------------

void RootedDisc::reset(VertexId root) {
  vertices_.assign(1, root);
  depth_.assign(1, 0);
  adjacency_.resize(1);
  adjacency_[0].clear();
  arcs_.clear();
  max_depth_ = 0;
}

std::size_t RootedDisc::max_degree() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    best = std::max(best, adjacency_[i].size());
  }
  return best;
}

bool RootedDisc::has_edge(VertexId a, VertexId b) const {
  const std::uint32_t ia = index_of(a);
  const std::uint32_t ib = index_of(b);
  if (ia == kNoIndex || ib == kNoIndex) return false;
  const auto& nb = adjacency_[ia];
  return std::find(nb.begin(), nb.end(), ib) != nb.end();
}

VertexId RootedDisc::max_child_label(std::uint32_t i) const {
  VertexId best = 0;
  for (std::uint32_t j : adjacency_[i]) {
    if (depth_[j] == depth_[i] + 1) best = std::max(best, vertices_[j]);
  }
  return best;
}

std::uint32_t RootedDisc::attach(std::uint32_t from, VertexId v) {
  const std::uint32_t idx = static_cast<std::uint32_t>(vertices_.size());
  const std::uint32_t d = depth_[from] + 1;
  vertices_.push_back(v);
  depth_.push_back(d);
  if (adjacency_.size() <= idx) adjacency_.resize(idx + 1);
  adjacency_[idx].clear();
  adjacency_[idx].push_back(from);
  adjacency_[from].push_back(idx);
  arcs_.push_back({vertices_[from], v});
  max_depth_ = std::max(max_depth_, d);
  return idx;
}

void RootedDisc::link(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t da = depth_[a], db = depth_[b];
  if ((da > db ? da - db : db - da) > 1) {
    throw std::logic_error("RootedDisc::link would change depths");
  }
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
  arcs_.push_back({vertices_[a], vertices_[b]});
}

std::uint32_t RootedDisc::add_vertex(VertexId v) {
  const std::uint32_t idx = static_cast<std::uint32_t>(vertices_.size());
  vertices_.push_back(v);
  depth_.push_back(kNoIndex);
  if (adjacency_.size() <= idx) adjacency_.resize(idx + 1);
  adjacency_[idx].clear();
  return idx;
}

void RootedDisc::add_edge(std::uint32_t a, std::uint32_t b) {
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
  arcs_.push_back({vertices_[a], vertices_[b]});
}

std::vector<std::uint32_t> RootedDisc::bfs_depths() const {
  std::vector<std::uint32_t> dist(vertices_.size(), kNoIndex);
  std::deque<std::uint32_t> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    const std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::uint32_t y : adjacency_[x]) {
      if (dist[y] == kNoIndex) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

void RootedDisc::refresh_depths() {
  depth_ = bfs_depths();
  max_depth_ = 0;
  for (std::uint32_t d : depth_) {
    if (d != kNoIndex) max_depth_ = std::max(max_depth_, d);
  }
}

// ---- Canonical trees -------------------------------------------------------

RootedTree cbfs_tree(const Graph& g, VertexId v, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (v == 0 || v > g.n()) {
    throw Error(ErrorCode::kLabelOutOfRange, "root " + std::to_string(v));
  }
  RootedTree tree(v);
  std::deque<std::uint32_t> queue{0};
  while (tree.size() < k && !queue.empty()) {
    const std::uint32_t ui = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(tree.vertex_at(ui))) {
      if (tree.contains(w)) continue;
      tree.attach(ui, w);
      if (tree.size() == k) return tree;
      queue.push_back(static_cast<std::uint32_t>(tree.size() - 1));
    }
  }
  return tree;
}

std::vector<Edge> cbfs_edge_order(const RootedTree& t) {
  std::vector<Edge> out;
  out.reserve(t.arcs().size());
  for (const Arc& a : t.arcs()) out.push_back(Edge::make(a.from, a.to));
  return out;
}

// ---- Violating edges -------------------------------------------------------

namespace detail {

template <typename Structure>
bool violates_impl(const Structure& s, VertexId a, VertexId b) {
  const std::uint32_t ia = s.index_of(a);
  const std::uint32_t ib = s.index_of(b);
  const std::uint32_t gap = depth_gap();
  if (ia == kNoIndex && ib == kNoIndex) return false;
  if (ia == kNoIndex || ib == kNoIndex) {
    // Exactly one endpoint inside: `inside` is u, `outside` is the new one.
    const std::uint32_t inside = ia == kNoIndex ? ib : ia;
    const VertexId outside = ia == kNoIndex ? a : b;
    return s.max_depth_for_check() - s.depth_at(inside) >= gap ||
           s.max_child_label(inside) > outside;
  }
  const std::uint32_t da = s.depth_at(ia), db = s.depth_at(ib);
  if (da == db) return false;
  const std::uint32_t shallow = da < db ? ia : ib;
  const std::uint32_t deep = da < db ? ib : ia;
  return s.depth_at(deep) - s.depth_at(shallow) >= gap ||
         s.max_child_label(shallow) > s.vertex_at(deep);
}

struct TreeView {
  const RootedTree& t;
  std::uint32_t index_of(VertexId v) const { return t.index_of(v); }
  std::uint32_t depth_at(std::uint32_t i) const { return t.depth_at(i); }
  VertexId vertex_at(std::uint32_t i) const { return t.vertex_at(i); }
  VertexId max_child_label(std::uint32_t i) const {
    return t.max_child_label(i);
  }
  std::uint32_t max_depth_for_check() const { return t.max_depth(); }
};

struct DiscView {
  const RootedDisc& f;
  std::uint32_t index_of(VertexId v) const { return f.index_of(v); }
  std::uint32_t depth_at(std::uint32_t i) const { return f.depth_at(i); }
  VertexId vertex_at(std::uint32_t i) const { return f.vertex_at(i); }
  VertexId max_child_label(std::uint32_t i) const {
    return f.max_child_label(i);
  }
  std::uint32_t max_depth_for_check() const { return f.radius(); }
};

bool violates(const RootedTree& t, VertexId a, VertexId b) {
  return violates_impl(TreeView{t}, a, b);
}

bool violates(const RootedDisc& f, VertexId a, VertexId b) {
  return violates_impl(DiscView{f}, a, b);
}

}  // namespace detail

bool is_violating_tree(const RootedTree& t, const Edge& e) {
  if (t.has_edge(e.u, e.v)) {
    throw Error(ErrorCode::kEdgeAlreadyInTree, edge_str(e.u, e.v));
  }
  return detail::violates(t, e.u, e.v);
}

bool is_violating_disc(const RootedDisc& f, const Edge& e) {
  if (f.has_edge(e.u, e.v)) {
    throw Error(ErrorCode::kEdgeAlreadyInDisc, edge_str(e.u, e.v));
  }
  return detail::violates(f, e.u, e.v);
}

// ---- Canonical discs -------------------------------------------------------

RootedDisc cano_disc(const Graph& g, VertexId v, std::size_t k,
                     std::size_t d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "d must be >= 1");
  if (v == 0 || v > g.n()) {
    throw Error(ErrorCode::kLabelOutOfRange, "root " + std::to_string(v));
  }
  RootedDisc disc(v);
  if (k == 0) return disc;
  const std::size_t cap = d + 1;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const std::uint32_t ui = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(disc.vertex_at(ui))) {
      if (disc.degree_at(ui) >= cap) break;
      const std::uint32_t wi = disc.index_of(w);
      if (wi == kNoIndex) {
        if (disc.depth_at(ui) + 1 > k) continue;
        queue.push_back(disc.attach(ui, w));
        continue;
      }
      if (disc.degree_at(wi) >= cap) continue;
      const auto& nb = disc.neighbors_at(ui);
      if (std::find(nb.begin(), nb.end(), wi) != nb.end()) continue;
      disc.link(ui, wi);
    }
  }
  return disc;
}

std::vector<Edge> disc_edge_order(const RootedDisc& f) {
  std::vector<Edge> out;
  out.reserve(f.arcs().size());
  for (const Arc& a : f.arcs()) out.push_back(Edge::make(a.from, a.to));
  return out;
}

RootedDisc induced_disc(const Graph& g, VertexId v, std::size_t k) {
  if (v == 0 || v > g.n()) {
    throw Error(ErrorCode::kLabelOutOfRange, "root " + std::to_string(v));
  }
  RootedDisc disc(v);
  std::vector<VertexId> order{v};
  std::vector<std::uint32_t> dist{0};
  for (std::size_t head = 0; head < order.size(); ++head) {
    if (dist[head] == k) continue;
    for (VertexId w : g.neighbors(order[head])) {
      if (std::find(order.begin(), order.end(), w) != order.end()) continue;
      order.push_back(w);
      dist.push_back(dist[head] + 1);
    }
  }
  for (std::size_t i = 1; i < order.size(); ++i) disc.add_vertex(order[i]);
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    for (VertexId w : g.neighbors(order[i])) {
      const std::uint32_t j = disc.index_of(w);
      if (j != kNoIndex && j > i) disc.add_edge(i, j);
    }
  }
  disc.refresh_depths();
  return disc;
}

RootedDisc project_extended_disc_graph(const RootedDisc& gamma, std::size_t k,
                                       std::size_t d) {
  if (gamma.radius() > k + 1) {
    throw Error(ErrorCode::kRadiusMismatch,
                "extended disc has radius " + std::to_string(gamma.radius()) +
                    " > k+1 = " + std::to_string(k + 1));
  }
  if (gamma.max_degree() > d + 1) {
    throw Error(ErrorCode::kRadiusMismatch,
                "extended disc has a vertex of degree > d+1");
  }
  const std::size_t n = gamma.size();
  std::vector<bool> high(n);
  for (std::uint32_t i = 0; i < n; ++i) high[i] = gamma.degree_at(i) >= d + 1;

  std::vector<std::uint32_t> dist(n, kNoIndex);
  std::vector<std::uint32_t> order{0};
  dist[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint32_t x = order[head];
    if (high[x] || dist[x] == k) continue;
    std::vector<std::uint32_t> next;
    for (std::uint32_t y : gamma.neighbors_at(x)) {
      if (!high[y] && dist[y] == kNoIndex) next.push_back(y);
    }
    std::sort(next.begin(), next.end(), [&](std::uint32_t p, std::uint32_t q) {
      return gamma.vertex_at(p) < gamma.vertex_at(q);
    });
    for (std::uint32_t y : next) {
      dist[y] = dist[x] + 1;
      order.push_back(y);
    }
  }
  RootedDisc out(gamma.root());
  std::vector<std::uint32_t> new_index(n, kNoIndex);
  new_index[0] = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    new_index[order[i]] = out.add_vertex(gamma.vertex_at(order[i]));
  }
  for (std::uint32_t x : order) {
    if (high[x]) continue;
    for (std::uint32_t y : gamma.neighbors_at(x)) {
      if (high[y] || new_index[y] == kNoIndex) continue;
      if (new_index[x] < new_index[y]) out.add_edge(new_index[x], new_index[y]);
    }
  }
  out.refresh_depths();
  return out;
}

DiscType project_extended_disc(const RootedDisc& gamma, std::size_t k,
                               std::size_t d) {
  return disc_code(project_extended_disc_graph(gamma, k, d));
}

}  // namespace streamscope
