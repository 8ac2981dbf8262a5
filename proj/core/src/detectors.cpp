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

#include "streamscope/detectors.hpp"

#include <string>

#include "streamscope/error.hpp"

namespace streamscope {

std::string_view to_string(BadReason reason) {
  switch (reason) {
    case BadReason::kNone: return "None";
    case BadReason::kViolatingEdge: return "ViolatingEdge";
    case BadReason::kLargeCC: return "LargeCC";
    case BadReason::kSmallCC: return "SmallCC";
    case BadReason::kLateCompletion: return "LateCompletion";
  }
  return "Unknown";
}

namespace {

void check_order(TimeStep& last_seen, TimeStep t) {
  if (t <= last_seen) {
    throw Error(ErrorCode::kOutOfOrderTimeStep,
                "time-step " + std::to_string(t) + " after " +
                    std::to_string(last_seen));
  }
  last_seen = t;
}

}  // namespace

// ---- TreeDetector ----------------------------------------------------------

TreeDetector::TreeDetector(VertexId root, std::size_t k)
    : root_(root), k_(k), tree_(root) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
}

void TreeDetector::reset(VertexId root) {
  root_ = root;
  tree_.reset(root);
  t_last_ = 0;
  last_seen_ = 0;
  reason_ = BadReason::kNone;
}

void TreeDetector::fail(BadReason reason) {
  reason_ = reason;
  tree_.reset(root_);
}

void TreeDetector::update(const Edge& e, TimeStep t) {
  check_order(last_seen_, t);
  if (bad()) return;
  if (detail::violates(tree_, e.u, e.v)) {
    fail(BadReason::kViolatingEdge);
    return;
  }
  const std::uint32_t iu = tree_.index_of(e.u);
  const std::uint32_t iv = tree_.index_of(e.v);
  if ((iu == kNoIndex) == (iv == kNoIndex)) return;
  if (iu != kNoIndex) {
    tree_.attach(iu, e.v);
  } else {
    tree_.attach(iv, e.u);
  }
  t_last_ = t;
  if (tree_.size() > k_) fail(BadReason::kLargeCC);
}

TreeOutcome TreeDetector::finalize(std::uint64_t lambda) const {
  if (bad()) return {false, reason_};
  if (tree_.size() < k_) return {false, BadReason::kSmallCC};
  if (t_last_ > lambda) return {false, BadReason::kLateCompletion};
  return {true, BadReason::kNone};
}

// ---- DiscDetector ----------------------------------------------------------

DiscDetector::DiscDetector(VertexId root, std::size_t k, std::size_t d)
    : root_(root), k_(k), d_(d), disc_(root) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "d must be >= 1");
}

void DiscDetector::reset(VertexId root) {
  root_ = root;
  disc_.reset(root);
  t_last_ = 0;
  last_seen_ = 0;
  reason_ = BadReason::kNone;
}

void DiscDetector::fail(BadReason reason) {
  reason_ = reason;
  disc_.reset(root_);
}

void DiscDetector::update(const Edge& e, TimeStep t) {
  check_order(last_seen_, t);
  if (bad() || k_ == 0) return;
  if (detail::violates(disc_, e.u, e.v)) {
    fail(BadReason::kViolatingEdge);
    return;
  }
  const std::uint32_t iu = disc_.index_of(e.u);
  const std::uint32_t iv = disc_.index_of(e.v);
  const std::size_t cap = d_ + 1;
  if (iu == kNoIndex && iv == kNoIndex) return;
  if (iu == kNoIndex || iv == kNoIndex) {
    const std::uint32_t inside = iu == kNoIndex ? iv : iu;
    const VertexId outside = iu == kNoIndex ? e.u : e.v;
    if (disc_.depth_at(inside) + 1 > k_ || disc_.degree_at(inside) >= cap) {
      return;
    }
    disc_.attach(inside, outside);
  } else {
    if (disc_.degree_at(iu) >= cap || disc_.degree_at(iv) >= cap) return;
    const std::uint32_t du = disc_.depth_at(iu), dv = disc_.depth_at(iv);
    if ((du > dv ? du - dv : dv - du) <= 1) {
      disc_.link(iu, iv);
    } else {
      // Only reachable with the depth-gap mutation enabled.
      disc_.add_edge(iu, iv);
      disc_.refresh_depths();
    }
  }
  t_last_ = t;
}

DiscOutcome DiscDetector::finalize(std::uint64_t lambda) const {
  if (k_ == 0) return {true, BadReason::kNone, singleton_disc_type()};
  if (bad()) return {false, reason_, {}};
  if (t_last_ > lambda) return {false, BadReason::kLateCompletion, {}};
  return {true, BadReason::kNone, disc_code(disc_)};
}

}  // namespace streamscope
