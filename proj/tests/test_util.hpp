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

#ifndef STREAMSCOPE_TESTS_TEST_UTIL_HPP_
#define STREAMSCOPE_TESTS_TEST_UTIL_HPP_

#include <gtest/gtest.h>

#include <optional>
#include <vector>

#include "streamscope/error.hpp"
#include "streamscope/graph.hpp"

namespace streamscope::testing_util {

// Code of the streamscope::Error thrown by f, or nullopt if none.
template <typename F>
std::optional<ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Graph make_graph(std::uint32_t n,
                        std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back(Edge::make(a, b));
  return Graph(n, std::move(edges), false);
}

}  // namespace streamscope::testing_util

#endif  // STREAMSCOPE_TESTS_TEST_UTIL_HPP_
