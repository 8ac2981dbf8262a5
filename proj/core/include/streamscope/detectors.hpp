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

#ifndef STREAMSCOPE_DETECTORS_HPP_
#define STREAMSCOPE_DETECTORS_HPP_

#include <cstdint>
#include <string_view>

#include "streamscope/canonical.hpp"
#include "streamscope/stream.hpp"

namespace streamscope {

enum class BadReason : std::uint8_t {
  kNone,
  kViolatingEdge,
  kLargeCC,
  kSmallCC,
  kLateCompletion,
};

std::string_view to_string(BadReason reason);

struct TreeOutcome {
  bool good = false;
  BadReason reason = BadReason::kNone;
};

struct DiscOutcome {
  bool good = false;
  BadReason reason = BadReason::kNone;
  DiscType type;  // set iff good
};

// Single-pass collector for "is the component of `root` of size k".
//
// Every stream edge is offered through update(); the phase threshold is only
// consulted by finalize(), after the last edge. Once Bad, the detector stays
// Bad and releases its tree.
class TreeDetector {
 public:
  TreeDetector(VertexId root, std::size_t k);

  void reset(VertexId root);
  void update(const Edge& e, TimeStep t);
  TreeOutcome finalize(std::uint64_t lambda) const;
  TreeOutcome finalize(const PhaseThreshold& threshold) const {
    return finalize(threshold.lambda);
  }

  VertexId root() const { return root_; }
  std::size_t k() const { return k_; }
  bool bad() const { return reason_ != BadReason::kNone; }
  BadReason reason() const { return reason_; }
  const RootedTree& tree() const { return tree_; }
  TimeStep t_last() const { return t_last_; }
  // Live vertex slots held by this detector.
  std::size_t slots() const { return bad() ? 0 : tree_.size(); }

 private:
  void fail(BadReason reason);

  VertexId root_;
  std::size_t k_;
  RootedTree tree_;
  TimeStep t_last_ = 0;
  TimeStep last_seen_ = 0;
  BadReason reason_ = BadReason::kNone;
};

// Single-pass collector of the extended (d+1)-bounded k-disc of `root`.
class DiscDetector {
 public:
  DiscDetector(VertexId root, std::size_t k, std::size_t d);

  void reset(VertexId root);
  void update(const Edge& e, TimeStep t);
  DiscOutcome finalize(std::uint64_t lambda) const;
  DiscOutcome finalize(const PhaseThreshold& threshold) const {
    return finalize(threshold.lambda);
  }

  VertexId root() const { return root_; }
  std::size_t k() const { return k_; }
  std::size_t d() const { return d_; }
  bool bad() const { return reason_ != BadReason::kNone; }
  BadReason reason() const { return reason_; }
  const RootedDisc& disc() const { return disc_; }
  TimeStep t_last() const { return t_last_; }
  std::size_t slots() const { return bad() ? 0 : disc_.size(); }

 private:
  void fail(BadReason reason);

  VertexId root_;
  std::size_t k_;
  std::size_t d_;
  RootedDisc disc_;
  TimeStep t_last_ = 0;
  TimeStep last_seen_ = 0;
  BadReason reason_ = BadReason::kNone;
};

}  // namespace streamscope

#endif  // STREAMSCOPE_DETECTORS_HPP_
