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

#ifndef STREAMSCOPE_CORPUS_HPP_
#define STREAMSCOPE_CORPUS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "streamscope/graph.hpp"
#include "streamscope/rng.hpp"

namespace streamscope::corpus {

// Relabels each part to a contiguous label block, in order.
Graph disjoint_union(std::span<const Graph> parts);
Graph repeat(const Graph& part, std::size_t copies);

Graph empty_graph(std::uint32_t n);
Graph path(std::uint32_t n);
Graph cycle(std::uint32_t n);
Graph star(std::uint32_t leaves);  // centre is vertex 1
Graph complete(std::uint32_t n);
Graph triangle();

// G(n, m): m distinct edges uniformly at random.
Graph random_gnm(std::uint32_t n, std::size_t m, Rng& rng);
// Uniform random labels: a random relabelling of g.
Graph shuffle_labels(const Graph& g, Rng& rng);
// Random spanning tree plus `extra` random edges, weights uniform in [1, W].
Graph random_connected_weighted(std::uint32_t n, std::size_t extra, Weight W,
                                Rng& rng);
// Random connected graph on n vertices: a random tree, then each remaining
// pair with probability p.
Graph random_connected(std::uint32_t n, double p, Rng& rng);

// 50 triangles, 30 single edges, 20 isolated vertices (n = 210).
Graph component_corpus();
// 200-vertex path; edge i (from 0) has weight 2 when i % 4 == 0, else 1.
Graph mst_path_corpus();
// 40 triangles and 40 three-vertex paths (n = 240).
Graph disc_corpus();
// Disjoint random connected components of 1..max_size vertices, exactly n
// vertices in total, labels shuffled.
Graph small_components(std::uint32_t n, std::uint32_t max_size, Rng& rng);
// Disjoint triangles and edges with about `m` edges in total.
Graph padded_corpus(std::size_t m);

// One representative per isomorphism class of graphs on exactly
// `vertices` vertices with at most `max_edges` edges.
std::vector<Graph> isomorphism_classes(std::uint32_t vertices,
                                       std::size_t max_edges);

}  // namespace streamscope::corpus

#endif  // STREAMSCOPE_CORPUS_HPP_
