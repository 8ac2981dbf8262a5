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

#include <gtest/gtest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "streamscope/canonical.hpp"
#include "streamscope/corpus.hpp"
#include "test_util.hpp"

namespace streamscope {
namespace {

using testing_util::error_code;
using testing_util::make_graph;

std::vector<Edge> edges_of(std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  std::vector<Edge> out;
  for (auto [a, b] : pairs) out.push_back(Edge::make(a, b));
  return out;
}

// Plain BFS that visits neighbours in label order and stops at k vertices.
std::vector<Edge> reference_cbfs(const Graph& g, VertexId v, std::size_t k) {
  std::vector<Edge> out;
  std::set<VertexId> seen{v};
  std::deque<VertexId> queue{v};
  while (!queue.empty() && seen.size() < k) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (seen.size() >= k) break;
      if (seen.insert(w).second) {
        out.push_back(Edge::make(u, w));
        queue.push_back(w);
      }
    }
  }
  return out;
}

RootedTree tree_from(VertexId root,
                     std::initializer_list<std::pair<VertexId, VertexId>> arcs) {
  RootedTree t(root);
  for (auto [p, c] : arcs) t.attach(t.index_of(p), c);
  return t;
}

RootedDisc disc_from(VertexId root,
                     std::initializer_list<std::pair<VertexId, VertexId>> arcs) {
  RootedDisc f(root);
  for (auto [p, c] : arcs) f.attach(f.index_of(p), c);
  return f;
}

TEST(Cbfs, HandTraces) {
  EXPECT_EQ(cbfs_edge_order(cbfs_tree(corpus::path(3), 2, 3)),
            edges_of({{2, 1}, {2, 3}}));
  EXPECT_EQ(cbfs_edge_order(cbfs_tree(corpus::triangle(), 1, 3)),
            edges_of({{1, 2}, {1, 3}}));
  const Graph star5 = make_graph(5, {{5, 1}, {5, 2}, {5, 3}, {5, 4}});
  EXPECT_EQ(cbfs_edge_order(cbfs_tree(star5, 5, 3)),
            edges_of({{5, 1}, {5, 2}}));
}

TEST(Cbfs, SmallComponentIsWhole) {
  const RootedTree t = cbfs_tree(corpus::path(3), 1, 10);
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.max_depth(), 2u);
}

TEST(Cbfs, MatchesReferenceBfs) {
  Rng rng(17);
  for (int rep = 0; rep < 40; ++rep) {
    const Graph g = corpus::random_gnm(20, 30, rng);
    for (VertexId v = 1; v <= g.n(); ++v) {
      for (std::size_t k = 1; k <= 6; ++k) {
        EXPECT_EQ(cbfs_edge_order(cbfs_tree(g, v, k)), reference_cbfs(g, v, k));
      }
    }
  }
}

TEST(ViolatingTree, HandCases) {
  EXPECT_TRUE(is_violating_tree(tree_from(1, {{1, 3}}), Edge::make(1, 2)));
  EXPECT_TRUE(is_violating_tree(tree_from(1, {{1, 2}, {2, 4}}),
                                Edge::make(1, 5)));
  EXPECT_FALSE(is_violating_tree(tree_from(1, {{1, 2}, {1, 3}}),
                                 Edge::make(2, 3)));
  EXPECT_FALSE(is_violating_tree(tree_from(1, {{1, 2}}), Edge::make(3, 4)));
  EXPECT_EQ(error_code([] {
              is_violating_tree(tree_from(1, {{1, 2}}), Edge::make(1, 2));
            }),
            ErrorCode::kEdgeAlreadyInTree);
}

TEST(ViolatingTree, ParentLabelIsNotAChild) {
  // Only children count: 3's parent 2 has a larger label than the new
  // vertex 1, but that must not make (3,1) violating.
  const RootedTree t = tree_from(2, {{2, 3}});
  EXPECT_FALSE(is_violating_tree(t, Edge::make(3, 1)));
}

TEST(ViolatingTree, CanonicalTreeAbsorbsNoEdgeOfItsOwnOrder) {
  // Growing CT_k(v) along its own edge order never sees a violation.
  Rng rng(23);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = corpus::random_gnm(15, 25, rng);
    for (VertexId v = 1; v <= g.n(); ++v) {
      const RootedTree ct = cbfs_tree(g, v, 5);
      RootedTree grown(v);
      for (const Arc& a : ct.arcs()) {
        ASSERT_FALSE(is_violating_tree(grown, Edge::make(a.from, a.to)));
        grown.attach(grown.index_of(a.from), a.to);
      }
    }
  }
}

TEST(ViolatingDisc, HandCases) {
  EXPECT_TRUE(is_violating_disc(disc_from(1, {{1, 3}}), Edge::make(1, 2)));
  EXPECT_FALSE(is_violating_disc(disc_from(1, {{1, 2}, {1, 3}, {2, 4}}),
                                 Edge::make(3, 4)));
  EXPECT_FALSE(is_violating_disc(disc_from(1, {{1, 2}}), Edge::make(5, 6)));
}

TEST(CanoDisc, StarLeaf) {
  const Graph g = corpus::star(4);  // centre 1, leaves 2..5
  const RootedDisc f = cano_disc(g, 2, 2, 2);
  EXPECT_EQ(f.root(), 2u);
  EXPECT_EQ(f.num_edges(), 3u);
  EXPECT_TRUE(f.has_edge(2, 1));
  EXPECT_TRUE(f.has_edge(1, 3));
  EXPECT_TRUE(f.has_edge(1, 4));
  EXPECT_EQ(f.degree_at(f.index_of(1)), 3u);
}

TEST(CanoDisc, RadiusZeroIsSingleton) {
  const RootedDisc f = cano_disc(corpus::complete(5), 3, 0, 2);
  EXPECT_EQ(f.size(), 1u);
  EXPECT_EQ(disc_code(f), singleton_disc_type());
}

TEST(CanoDisc, TriangleIsClosed) {
  const RootedDisc f = cano_disc(corpus::cycle(3), 1, 1, 2);
  EXPECT_EQ(f.num_edges(), 3u);
  EXPECT_TRUE(f.has_edge(2, 3));
}

TEST(CanoDisc, RespectsBounds) {
  Rng rng(31);
  for (int rep = 0; rep < 40; ++rep) {
    const Graph g = corpus::random_gnm(20, 45, rng);
    for (VertexId v = 1; v <= g.n(); ++v) {
      for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t d = 1; d <= 3; ++d) {
          const RootedDisc f = cano_disc(g, v, k, d);
          EXPECT_LE(f.radius(), k);
          EXPECT_LE(f.max_degree(), d + 1);
          EXPECT_TRUE(f.depths_consistent());
          for (const Arc& a : f.arcs()) EXPECT_TRUE(g.has_edge(a.from, a.to));
        }
      }
    }
  }
}

TEST(CanoDisc, BoundedDegreeGraphGivesInducedBall) {
  // With every degree <= d no cap binds, so the disc is the induced ball.
  Rng rng(37);
  for (int rep = 0; rep < 40; ++rep) {
    const Graph g = truncate_high_degree(corpus::random_gnm(20, 25, rng), 3);
    for (VertexId v = 1; v <= g.n(); ++v) {
      for (std::size_t k = 1; k <= 3; ++k) {
        const RootedDisc f = cano_disc(g, v, k, 3);
        const RootedDisc ball = induced_disc(g, v, k);
        EXPECT_EQ(disc_code(f), disc_code(ball));
      }
    }
  }
}

// ---- Codes ----------------------------------------------------------------

struct SmallRootedGraph {
  std::vector<VertexId> vertices;  // root first
  std::set<std::pair<VertexId, VertexId>> edges;
};

SmallRootedGraph to_small(const RootedDisc& f) {
  SmallRootedGraph s;
  s.vertices = f.vertices();
  for (const Arc& a : f.arcs()) {
    s.edges.insert(std::minmax(a.from, a.to));
  }
  return s;
}

bool rooted_isomorphic(const SmallRootedGraph& a, const SmallRootedGraph& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size())
    return false;
  const std::size_t n = a.vertices.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[0] != 0) continue;
    std::map<VertexId, VertexId> map;
    for (std::size_t i = 0; i < n; ++i) map[a.vertices[i]] = b.vertices[perm[i]];
    bool ok = true;
    for (auto [x, y] : a.edges) {
      if (!b.edges.contains(std::minmax(map[x], map[y]))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Graph> all_graphs(std::uint32_t n) {
  std::vector<std::pair<VertexId, VertexId>> slots;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b) slots.emplace_back(a, b);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) edges.push_back(Edge::make(slots[i].first, slots[i].second));
    }
    out.emplace_back(n, std::move(edges), false);
  }
  return out;
}

void check_code_classification(std::uint32_t max_n, std::size_t k,
                               std::size_t d) {
  std::vector<RootedDisc> discs;
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (VertexId v = 1; v <= n; ++v) discs.push_back(cano_disc(g, v, k, d));
    }
  }
  std::map<DiscType, SmallRootedGraph> reps;
  for (const RootedDisc& f : discs) {
    const DiscType code = disc_code(f);
    const SmallRootedGraph s = to_small(f);
    auto [it, fresh] = reps.emplace(code, s);
    if (!fresh) {
      ASSERT_TRUE(rooted_isomorphic(it->second, s)) << "same code, not isomorphic";
    }
  }
  for (auto a = reps.begin(); a != reps.end(); ++a) {
    for (auto b = std::next(a); b != reps.end(); ++b) {
      ASSERT_FALSE(rooted_isomorphic(a->second, b->second))
          << "isomorphic discs with different codes";
    }
  }
}

TEST(DiscCode, ClassifiesRadiusOneDiscsOnFourVertices) {
  check_code_classification(4, 1, 2);
}

TEST(DiscCode, ClassifiesRadiusTwoDiscsOnFiveVertices) {
  check_code_classification(5, 2, 2);
}

TEST(DiscCode, RootPreserving) {
  const RootedDisc end_a = induced_disc(corpus::path(3), 1, 2);
  const Graph relabelled = make_graph(9, {{7, 4}, {4, 9}});
  const RootedDisc end_b = induced_disc(relabelled, 7, 2);
  const RootedDisc middle = induced_disc(corpus::path(3), 2, 2);
  EXPECT_EQ(disc_code(end_a), disc_code(end_b));
  EXPECT_NE(disc_code(end_a), disc_code(middle));
}

TEST(DiscCode, DecodeRoundTrip) {
  Rng rng(41);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = corpus::random_gnm(15, 25, rng);
    for (VertexId v = 1; v <= g.n(); ++v) {
      const DiscType t = disc_code(cano_disc(g, v, 2, 3));
      EXPECT_EQ(disc_code(decode_disc(t)), t);
      EXPECT_EQ(DiscType::from_hex(t.hex()), t);
    }
  }
}

TEST(DiscCode, TooLarge) {
  EXPECT_EQ(error_code([] {
              disc_code(induced_disc(corpus::star(10), 1, 1), 5);
            }),
            ErrorCode::kDiscTooLarge);
}

TEST(GraphCode, RelabellingInvariant) {
  Rng rng(43);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = corpus::random_gnm(6, 7, rng);
    EXPECT_EQ(graph_code(g), graph_code(corpus::shuffle_labels(g, rng)));
  }
  EXPECT_NE(graph_code(corpus::path(4)), graph_code(corpus::star(3)));
}

// ---- Projection -----------------------------------------------------------

TEST(Projection, StarLeafBecomesSingleton) {
  const RootedDisc extended = cano_disc(corpus::star(4), 2, 2, 2);
  EXPECT_EQ(project_extended_disc(extended, 1, 2), singleton_disc_type());
}

TEST(Projection, TriangleIsIdentity) {
  const RootedDisc extended = cano_disc(corpus::cycle(3), 1, 2, 2);
  EXPECT_EQ(project_extended_disc(extended, 1, 2),
            disc_code(cano_disc(corpus::cycle(3), 1, 1, 2)));
}

TEST(Projection, SaturatedRootIsSingleton) {
  const Graph g = corpus::star(3);  // centre 1 has degree 3 = d + 1
  EXPECT_EQ(project_extended_disc(cano_disc(g, 1, 2, 2), 1, 2),
            singleton_disc_type());
}

TEST(Projection, AgreesWithTruncationWhenNoCapBinds) {
  // No two saturated vertices are adjacent, so every high vertex reaches
  // disc-degree d + 1 and the capped BFS sees the true high/low split.
  Rng rng(47);
  const std::size_t d = 3;
  int tested = 0;
  for (int rep = 0; rep < 200 && tested < 30; ++rep) {
    const Graph g = corpus::random_gnm(12, 14, rng);
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (g.degree(e.u) > d && g.degree(e.v) > d) ok = false;
    }
    for (VertexId v = 1; v <= g.n(); ++v) {
      if (g.degree(v) > d + 1) ok = false;
    }
    if (!ok) continue;
    ++tested;
    const Graph low = truncate_high_degree(g, d);
    for (VertexId v = 1; v <= g.n(); ++v) {
      for (std::size_t k = 1; k <= 2; ++k) {
        const RootedDisc extended = cano_disc(g, v, k + 1, d);
        EXPECT_EQ(project_extended_disc(extended, k, d),
                  disc_code(cano_disc(low, v, k, d)));
      }
    }
  }
  EXPECT_GE(tested, 10);
}

}  // namespace
}  // namespace streamscope
