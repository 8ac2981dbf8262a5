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

#include "streamscope/corpus.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "streamscope/canonical.hpp"
#include "streamscope/error.hpp"
#include "streamscope/stream.hpp"

namespace streamscope::corpus {

Graph disjoint_union(std::span<const Graph> parts) {
  std::vector<Edge> edges;
  std::uint32_t offset = 0;
  bool weighted = !parts.empty();
  Weight max_weight = 0;
  for (const Graph& g : parts) weighted = weighted && g.weighted();
  for (const Graph& g : parts) {
    for (const Edge& e : g.edges()) {
      edges.push_back(Edge::make(e.u + offset, e.v + offset,
                                 weighted ? e.weight : 0));
    }
    max_weight = std::max(max_weight, g.max_weight());
    offset += g.n();
  }
  return Graph(offset, std::move(edges), weighted,
               weighted ? max_weight : 0);
}

Graph repeat(const Graph& part, std::size_t copies) {
  std::vector<Graph> parts(copies, part);
  return disjoint_union(parts);
}

Graph empty_graph(std::uint32_t n) { return Graph(n, {}, false); }

Graph path(std::uint32_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back(Edge::make(v, v + 1));
  return Graph(n, std::move(edges), false);
}

Graph cycle(std::uint32_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back(Edge::make(v, v + 1));
  edges.push_back(Edge::make(1, n));
  return Graph(n, std::move(edges), false);
}

Graph star(std::uint32_t leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 2; v <= leaves + 1; ++v) edges.push_back(Edge::make(1, v));
  return Graph(leaves + 1, std::move(edges), false);
}

Graph complete(std::uint32_t n) {
  std::vector<Edge> edges;
  for (VertexId a = 1; a <= n; ++a) {
    for (VertexId b = a + 1; b <= n; ++b) edges.push_back(Edge::make(a, b));
  }
  return Graph(n, std::move(edges), false);
}

Graph triangle() { return complete(3); }

Graph random_gnm(std::uint32_t n, std::size_t m, Rng& rng) {
  const std::uint64_t pairs = std::uint64_t{n} * (n - (n > 0 ? 1 : 0)) / 2;
  if (m > pairs) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(m) + " edges do not fit on " +
                    std::to_string(n) + " vertices");
  }
  std::set<std::pair<VertexId, VertexId>> chosen;
  while (chosen.size() < m) {
    const auto a = static_cast<VertexId>(rng.uniform_index(n) + 1);
    const auto b = static_cast<VertexId>(rng.uniform_index(n) + 1);
    if (a == b) continue;
    chosen.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : chosen) edges.push_back(Edge::make(a, b));
  // Set order is sorted; give the edge list a random construction order.
  fisher_yates(std::span<Edge>(edges), rng);
  return Graph(n, std::move(edges), false);
}

Graph shuffle_labels(const Graph& g, Rng& rng) {
  std::vector<VertexId> label(g.n() + 1);
  std::iota(label.begin(), label.end(), VertexId{0});
  fisher_yates(std::span<VertexId>(label).subspan(1), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back(Edge::make(label[e.u], label[e.v], e.weight));
  }
  return Graph(g.n(), std::move(edges), g.weighted(), g.max_weight());
}

namespace {

// Random labelled tree on 1..n: each vertex attaches to an earlier one in a
// random order.
std::vector<Edge> random_tree(std::uint32_t n, Rng& rng) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{1});
  fisher_yates(std::span<VertexId>(order), rng);
  std::vector<Edge> edges;
  for (std::uint32_t i = 1; i < n; ++i) {
    edges.push_back(Edge::make(order[i], order[rng.uniform_index(i)]));
  }
  return edges;
}

}  // namespace

Graph random_connected_weighted(std::uint32_t n, std::size_t extra, Weight W,
                                Rng& rng) {
  if (W < 1) throw Error(ErrorCode::kBadW, "W must be >= 1");
  std::vector<Edge> edges = random_tree(n, rng);
  std::set<std::pair<VertexId, VertexId>> present;
  for (const Edge& e : edges) present.emplace(e.u, e.v);
  const std::uint64_t pairs = std::uint64_t{n} * (n - (n > 0 ? 1 : 0)) / 2;
  extra = static_cast<std::size_t>(
      std::min<std::uint64_t>(extra, pairs - edges.size()));
  while (present.size() < edges.size() + extra) {
    const auto a = static_cast<VertexId>(rng.uniform_index(n) + 1);
    const auto b = static_cast<VertexId>(rng.uniform_index(n) + 1);
    if (a == b) continue;
    present.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<Edge> weighted;
  for (const auto& [a, b] : present) {
    weighted.push_back(
        Edge::make(a, b, static_cast<Weight>(rng.uniform_index(W) + 1)));
  }
  return Graph(n, std::move(weighted), true, W);
}

Graph random_connected(std::uint32_t n, double p, Rng& rng) {
  std::vector<Edge> edges = random_tree(n, rng);
  std::set<std::pair<VertexId, VertexId>> present;
  for (const Edge& e : edges) present.emplace(e.u, e.v);
  for (VertexId a = 1; a <= n; ++a) {
    for (VertexId b = a + 1; b <= n; ++b) {
      if (!present.contains({a, b}) && rng.coin(p)) {
        edges.push_back(Edge::make(a, b));
      }
    }
  }
  return Graph(n, std::move(edges), false);
}

Graph component_corpus() {
  const std::vector<Graph> parts{repeat(triangle(), 50), repeat(path(2), 30),
                                 empty_graph(20)};
  return disjoint_union(parts);
}

Graph mst_path_corpus() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < 200; ++i) {
    edges.push_back(Edge::make(i + 1, i + 2, i % 4 == 0 ? 2 : 1));
  }
  return Graph(200, std::move(edges), true, 2);
}

Graph disc_corpus() {
  const std::vector<Graph> parts{repeat(triangle(), 40), repeat(path(3), 40)};
  return disjoint_union(parts);
}

Graph small_components(std::uint32_t n, std::uint32_t max_size, Rng& rng) {
  std::vector<Graph> parts;
  for (std::uint32_t left = n; left > 0;) {
    const auto size = static_cast<std::uint32_t>(
        rng.uniform_index(std::min(max_size, left)) + 1);
    parts.push_back(random_connected(size, 0.3, rng));
    left -= size;
  }
  return shuffle_labels(disjoint_union(parts), rng);
}

Graph padded_corpus(std::size_t m) {
  const std::size_t triangles = m / 4;
  const std::size_t edges = m - 3 * triangles;
  const std::vector<Graph> parts{repeat(triangle(), triangles),
                                 repeat(path(2), edges)};
  return disjoint_union(parts);
}

std::vector<Graph> isomorphism_classes(std::uint32_t vertices,
                                       std::size_t max_edges) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 1; a <= vertices; ++a) {
    for (VertexId b = a + 1; b <= vertices; ++b) pairs.emplace_back(a, b);
  }
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
       ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max_edges) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) {
        edges.push_back(Edge::make(pairs[i].first, pairs[i].second));
      }
    }
    Graph g(vertices, std::move(edges), false);
    if (seen.insert(graph_code(g)).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace streamscope::corpus
