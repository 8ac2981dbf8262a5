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

// Canonical labelling of small graphs by colour refinement and
// individualisation. The search keeps the lexicographically smallest
// adjacency certificate over all leaves; interchangeable twins in a cell are
// branched on once.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "streamscope/canonical.hpp"
#include "streamscope/error.hpp"

namespace streamscope {
namespace {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

constexpr std::uint64_t kLeafBudget = 4'000'000;

// Equitable refinement. Colours are re-ranked by (old colour, sorted
// neighbour colours) so the result does not depend on vertex numbering.
void refine(const Adjacency& adj, std::vector<std::uint32_t>& colors) {
  const std::size_t n = colors.size();
  std::size_t classes = 0;
  {
    std::vector<std::uint32_t> tmp(colors);
    std::sort(tmp.begin(), tmp.end());
    classes = static_cast<std::size_t>(
        std::unique(tmp.begin(), tmp.end()) - tmp.begin());
  }
  std::vector<std::vector<std::uint32_t>> sig(n);
  std::vector<std::uint32_t> idx(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].clear();
      sig[v].push_back(colors[v]);
      for (std::uint32_t w : adj[v]) sig[v].push_back(colors[w]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(),
              [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
    std::vector<std::uint32_t> next(n);
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
      next[idx[i]] = rank;
    }
    const std::size_t new_classes = static_cast<std::size_t>(rank) + 1;
    colors.swap(next);
    if (new_classes == classes) break;
    classes = new_classes;
  }
}

bool adjacent(const Adjacency& adj, std::uint32_t a, std::uint32_t b) {
  return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
}

// Swapping a and b is an automorphism iff N(a)\{b} == N(b)\{a}.
bool twins(const Adjacency& adj, std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint32_t> na, nb;
  for (std::uint32_t x : adj[a]) {
    if (x != b) na.push_back(x);
  }
  for (std::uint32_t x : adj[b]) {
    if (x != a) nb.push_back(x);
  }
  if (na.size() != nb.size()) return false;
  std::sort(na.begin(), na.end());
  std::sort(nb.begin(), nb.end());
  return na == nb;
}

struct Search {
  const Adjacency& adj;
  std::string best;
  std::vector<std::uint32_t> best_order;  // position -> vertex
  std::uint64_t leaves = 0;

  std::string certificate(const std::vector<std::uint32_t>& order) const {
    const std::size_t n = order.size();
    std::string bits((n * (n - 1) / 2 + 7) / 8, '\0');
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++bit) {
        if (adjacent(adj, order[i], order[j])) {
          bits[bit / 8] = static_cast<char>(
              static_cast<unsigned char>(bits[bit / 8]) | (0x80u >> (bit % 8)));
        }
      }
    }
    return bits;
  }

  void run(std::vector<std::uint32_t> colors) {
    refine(adj, colors);
    const std::size_t n = colors.size();
    std::vector<std::uint32_t> count(n, 0);
    for (std::uint32_t c : colors) ++count[c];
    std::uint32_t target = kNoIndex;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target == kNoIndex) {
      if (++leaves > kLeafBudget) {
        throw Error(ErrorCode::kDiscTooLarge,
                    "canonical search exceeded its leaf budget");
      }
      std::vector<std::uint32_t> order(n);
      for (std::uint32_t v = 0; v < n; ++v) order[colors[v]] = v;
      std::string cert = certificate(order);
      if (best_order.empty() || cert < best) {
        best = std::move(cert);
        best_order = std::move(order);
      }
      return;
    }
    std::vector<std::uint32_t> cell;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (colors[v] == target) cell.push_back(v);
    }
    std::vector<std::uint32_t> reps;
    for (std::uint32_t v : cell) {
      bool covered = false;
      for (std::uint32_t r : reps) {
        if (twins(adj, r, v)) {
          covered = true;
          break;
        }
      }
      if (!covered) reps.push_back(v);
    }
    for (std::uint32_t r : reps) {
      std::vector<std::uint32_t> next(colors);
      for (auto& c : next) c = 2 * c + 1;
      next[r] = 2 * target;
      run(std::move(next));
    }
  }
};

void put_varint(std::string& out, std::uint64_t x) {
  while (x >= 0x80) {
    out.push_back(static_cast<char>((x & 0x7f) | 0x80));
    x >>= 7;
  }
  out.push_back(static_cast<char>(x));
}

std::uint64_t get_varint(const std::string& in, std::size_t& pos) {
  std::uint64_t x = 0;
  int shift = 0;
  while (true) {
    if (pos >= in.size() || shift > 56) {
      throw Error(ErrorCode::kInvalidArgument, "malformed disc code");
    }
    const auto byte = static_cast<unsigned char>(in[pos++]);
    x |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
    if (!(byte & 0x80)) return x;
    shift += 7;
  }
}

struct CanonicalForm {
  std::vector<std::uint32_t> order;  // position -> vertex index
  std::string bits;
};

CanonicalForm canonical_form(const Adjacency& adj,
                             std::vector<std::uint32_t> colors) {
  if (adj.empty()) return {};
  Search search{adj, {}, {}, 0};
  search.run(std::move(colors));
  return {std::move(search.best_order), std::move(search.best)};
}

std::string pack(std::size_t nv, std::size_t ne, const std::string& bits) {
  std::string code;
  put_varint(code, nv);
  put_varint(code, ne);
  code += bits;
  return code;
}

}  // namespace

DiscType disc_code(const RootedDisc& f, std::size_t max_vertices) {
  const std::size_t n = f.size();
  if (n > max_vertices) {
    throw Error(ErrorCode::kDiscTooLarge,
                std::to_string(n) + " vertices exceeds cap " +
                    std::to_string(max_vertices));
  }
  Adjacency adj(n);
  for (std::uint32_t i = 0; i < n; ++i) adj[i] = f.neighbors_at(i);
  std::vector<std::uint32_t> colors(n, 1);
  colors[0] = 0;
  CanonicalForm form = canonical_form(adj, std::move(colors));
  DiscType type;
  type.num_vertices = static_cast<std::uint32_t>(n);
  type.num_edges = static_cast<std::uint32_t>(f.num_edges());
  type.code = pack(n, f.num_edges(), form.bits);
  return type;
}

DiscType singleton_disc_type() { return disc_code(RootedDisc(1)); }

RootedDisc decode_disc(const DiscType& type) {
  std::size_t pos = 0;
  const std::uint64_t nv = get_varint(type.code, pos);
  const std::uint64_t ne = get_varint(type.code, pos);
  if (nv == 0 || nv > 4096) {
    throw Error(ErrorCode::kInvalidArgument, "malformed disc code");
  }
  const std::string bits = type.code.substr(pos);
  if (bits.size() != (nv * (nv - 1) / 2 + 7) / 8) {
    throw Error(ErrorCode::kInvalidArgument, "malformed disc code");
  }
  RootedDisc disc(1);
  for (std::uint32_t i = 1; i < nv; ++i) disc.add_vertex(i + 1);
  std::size_t bit = 0;
  for (std::uint32_t i = 0; i < nv; ++i) {
    for (std::uint32_t j = i + 1; j < nv; ++j, ++bit) {
      if (static_cast<unsigned char>(bits[bit / 8]) & (0x80u >> (bit % 8))) {
        disc.add_edge(i, j);
      }
    }
  }
  if (disc.num_edges() != ne) {
    throw Error(ErrorCode::kInvalidArgument, "disc code edge count mismatch");
  }
  disc.refresh_depths();
  return disc;
}

std::string DiscType::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * code.size());
  for (unsigned char c : code) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

DiscType DiscType::from_hex(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(ErrorCode::kInvalidArgument, "bad hex digit in disc code");
  };
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "odd-length disc code");
  }
  DiscType type;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    type.code.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  std::size_t pos = 0;
  type.num_vertices = static_cast<std::uint32_t>(get_varint(type.code, pos));
  type.num_edges = static_cast<std::uint32_t>(get_varint(type.code, pos));
  return type;
}

std::string graph_code(const Graph& g) {
  Adjacency adj(g.n());
  for (VertexId v = 1; v <= g.n(); ++v) {
    for (VertexId w : g.neighbors(v)) adj[v - 1].push_back(w - 1);
  }
  CanonicalForm form =
      canonical_form(adj, std::vector<std::uint32_t>(g.n(), 0));
  return pack(g.n(), g.m(), form.bits);
}

Graph canonical_relabel(const Graph& g) {
  Adjacency adj(g.n());
  for (VertexId v = 1; v <= g.n(); ++v) {
    for (VertexId w : g.neighbors(v)) adj[v - 1].push_back(w - 1);
  }
  CanonicalForm form =
      canonical_form(adj, std::vector<std::uint32_t>(g.n(), 0));
  std::vector<VertexId> label(g.n());
  for (std::uint32_t pos = 0; pos < form.order.size(); ++pos) {
    label[form.order[pos]] = pos + 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back(Edge::make(label[e.u - 1], label[e.v - 1], e.weight));
  }
  std::sort(edges.begin(), edges.end());
  return Graph(g.n(), std::move(edges), g.weighted(), g.max_weight());
}

}  // namespace streamscope
