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

#include <sstream>
#include <vector>

#include "streamscope/corpus.hpp"
#include "streamscope/graph.hpp"
#include "test_util.hpp"

namespace streamscope {
namespace {

using testing_util::error_code;
using testing_util::make_graph;

TEST(LoadEdgeList, UnweightedWithOverride) {
  const Graph g = load_edge_list("1 2\n2 3", {.n = 4});
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.m(), 2u);
  EXPECT_FALSE(g.weighted());
}

TEST(LoadEdgeList, WeightedInfersW) {
  const Graph g = load_edge_list("1 2 1\n1 3 2\n2 3 3");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_TRUE(g.weighted());
  EXPECT_EQ(g.max_weight(), 3u);
  EXPECT_EQ(g.weight(3, 2), 3u);
}

TEST(LoadEdgeList, CommentsAndBlankLines) {
  const Graph g = load_edge_list("# header\n\n1 2\n# mid\n3 2\n");
  EXPECT_EQ(g.n(), 3u);
  EXPECT_TRUE(g.has_edge(2, 3));
}

TEST(LoadEdgeList, Errors) {
  EXPECT_EQ(error_code([] { load_edge_list("1 1"); }), ErrorCode::kSelfLoop);
  EXPECT_EQ(error_code([] { load_edge_list("1 2\n2 1"); }),
            ErrorCode::kDuplicateEdge);
  EXPECT_EQ(error_code([] { load_edge_list("1 5", {.n = 4}); }),
            ErrorCode::kLabelOutOfRange);
  EXPECT_EQ(error_code([] { load_edge_list("1 2 3", {.max_weight = 2}); }),
            ErrorCode::kBadWeight);
  EXPECT_EQ(error_code([] { load_edge_list("1 2 0"); }),
            ErrorCode::kBadWeight);
  EXPECT_EQ(error_code([] { load_edge_list("1 x"); }), ErrorCode::kParseError);
}

TEST(LoadEdgeList, ParseErrorNamesLine) {
  try {
    load_edge_list("1 2\n2 3\nfoo bar\n");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos) << e.what();
  }
}

TEST(LoadEdgeList, SerializeRoundTrip) {
  Rng rng(11);
  const Graph g = corpus::random_gnm(25, 40, rng);
  const std::string text = serialize_edge_list(g);
  const Graph back = load_edge_list(text, {.n = g.n()});
  EXPECT_EQ(serialize_edge_list(back), text);
  EXPECT_EQ(back.m(), g.m());
}

TEST(Neighbors, SortedAscending) {
  const Graph star = make_graph(4, {{1, 4}, {1, 2}, {1, 3}});
  EXPECT_EQ(neighbors_sorted(star, 1), (std::vector<VertexId>{2, 3, 4}));
  const Graph p = make_graph(4, {{1, 2}, {2, 3}});
  EXPECT_EQ(neighbors_sorted(p, 2), (std::vector<VertexId>{1, 3}));
  EXPECT_TRUE(neighbors_sorted(p, 4).empty());
  EXPECT_EQ(error_code([&] { neighbors_sorted(p, 9); }),
            ErrorCode::kLabelOutOfRange);
}

TEST(Truncate, RemovesEdgesAtHighDegreeVertices) {
  EXPECT_EQ(truncate_high_degree(corpus::star(4), 2).m(), 0u);
  EXPECT_EQ(truncate_high_degree(corpus::star(4), 2).n(), 5u);
  EXPECT_EQ(truncate_high_degree(corpus::cycle(3), 2).m(), 3u);
  EXPECT_EQ(truncate_high_degree(corpus::path(4), 1).m(), 0u);
  // Path 1-2-3-4-5 with an extra leaf on 3: only edges at 3 go.
  const Graph g = make_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}});
  const Graph t = truncate_high_degree(g, 2);
  EXPECT_TRUE(t.has_edge(1, 2));
  EXPECT_TRUE(t.has_edge(4, 5));
  EXPECT_FALSE(t.has_edge(2, 3));
  EXPECT_EQ(t.m(), 2u);
}

TEST(Truncate, BruteForceAgreement) {
  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = corpus::random_gnm(15, 25, rng);
    for (std::size_t d = 1; d <= 4; ++d) {
      const Graph t = truncate_high_degree(g, d);
      for (const Edge& e : g.edges()) {
        const bool keep = g.degree(e.u) <= d && g.degree(e.v) <= d;
        EXPECT_EQ(t.has_edge(e.u, e.v), keep);
      }
    }
  }
}

TEST(ThresholdGraph, KeepsLightEdges) {
  const Graph g = load_edge_list("1 2 1\n1 3 2\n2 3 3");
  EXPECT_EQ(threshold_graph(g, 1).m(), 1u);
  EXPECT_EQ(threshold_graph(g, 2).m(), 2u);
  EXPECT_EQ(threshold_graph(g, 3).m(), 3u);
  EXPECT_EQ(error_code([] { threshold_graph(corpus::triangle(), 1); }),
            ErrorCode::kUnweightedStream);
}

}  // namespace
}  // namespace streamscope
