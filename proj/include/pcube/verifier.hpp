// Copyright 2026 The pcube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcube/bitvec.hpp"
#include "pcube/graph.hpp"
#include "pcube/labeler.hpp"
#include "pcube/result.hpp"

namespace pcube {

// A token (coordinate, target bit) moves a vertex whose bit at `coord`
// differs from `target_bit` across that coordinate's cut. Tokens are
// numbered 2*coord + target_bit.
using TokenId = std::uint32_t;

struct Token {
  std::uint32_t coord;
  std::uint8_t target_bit;

  TokenId id() const noexcept { return 2 * coord + target_bit; }
  Token reversed() const noexcept { return {coord, static_cast<std::uint8_t>(target_bit ^ 1U)}; }
  static Token from_id(TokenId id) noexcept { return {id / 2, static_cast<std::uint8_t>(id % 2)}; }
  friend bool operator==(const Token&, const Token&) = default;
};

namespace detail {

inline void require_shape(const Graph& g, const SemicubeLabeling& lab) {
  if (lab.labels.size() != g.n()) throw std::invalid_argument("labeling covers a different number of vertices");
  for (const BitVector& b : lab.labels) {
    if (b.size() != lab.dimension) throw std::invalid_argument("label length differs from dimension");
  }
}

}  // namespace detail

// Each edge's endpoint labels differ exactly in its class coordinate, and
// every coordinate splits the vertices into two nonempty sides.
inline Check check_cut_partition(const Graph& g, const SemicubeLabeling& lab, const EdgeClassPartition& part) {
  detail::require_shape(g, lab);
  if (part.edge_count() != g.m()) throw std::invalid_argument("partition covers a different number of edges");
  const std::size_t dim = lab.dimension;
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& edge = g.edge(e);
    const std::uint32_t c = part.coordinate(e);
    BitClass diff = (lab.labels[edge.u] ^ lab.labels[edge.v]).classify();
    if (c == kNone || c >= dim || diff != BitClass::exactly_one(c)) {
      return Refusal{RefusalKind::kCutViolation, e, c,
                     "edge " + std::to_string(e) + " does not cross exactly the cut of its class"};
    }
  }
  if (g.n() == 0) return Pass{};
  std::vector<Word> any(words_for(dim), 0);
  std::vector<Word> all(words_for(dim), ~Word{0});
  for (const BitVector& b : lab.labels) {
    auto w = b.words();
    for (std::size_t i = 0; i < w.size(); ++i) {
      any[i] |= w[i];
      all[i] &= w[i];
    }
  }
  for (std::size_t c = 0; c < dim; ++c) {
    bool has_one = (any[c / kWordBits] >> (c % kWordBits)) & 1U;
    bool has_zero = !((all[c / kWordBits] >> (c % kWordBits)) & 1U);
    if (!has_one || !has_zero) {
      return Refusal{RefusalKind::kEmptySide, c, 0, "coordinate " + std::to_string(c) + " has an empty side"};
    }
  }
  return Pass{};
}

// act(v, (i, b)) for every vertex and token. Stored as one neighbor per
// (vertex, coordinate): the neighbor across cut i, if any. The token with
// target bit equal to v's own bit never moves v, so one slot per
// coordinate covers both tokens.
class ActionTable {
 public:
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return dim_; }

  Vertex across(Vertex v, std::uint32_t coord) const noexcept { return across_[std::size_t{v} * dim_ + coord]; }
  bool bit(Vertex v, std::uint32_t coord) const noexcept { return bits_.test(v, coord); }

  Vertex act(Vertex v, Token t) const noexcept {
    if (bit(v, t.coord) == (t.target_bit != 0)) return v;
    Vertex w = across(v, t.coord);
    return w == kNone ? v : w;
  }
  bool acts(Vertex v, Token t) const noexcept { return act(v, t) != v; }

  friend Result<ActionTable> build_action_table(const Graph& g, const SemicubeLabeling& lab);

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<Vertex> across_;
  BitMatrix bits_;
};

inline Result<ActionTable> build_action_table(const Graph& g, const SemicubeLabeling& lab) {
  detail::require_shape(g, lab);
  ActionTable t;
  t.n_ = g.n();
  t.dim_ = lab.dimension;
  t.across_.assign(t.n_ * t.dim_, kNone);
  t.bits_ = BitMatrix(t.n_, t.dim_);
  for (Vertex v = 0; v < t.n_; ++v) {
    auto w = lab.labels[v].words();
    std::copy(w.begin(), w.end(), t.bits_.row(v).begin());
  }
  for (Vertex v = 0; v < t.n_; ++v) {
    for (const Arc& a : g.neighbors(v)) {
      BitClass diff = t.bits_.classify_difference(v, a.to);
      if (diff.kind != BitClass::Kind::kExactlyOne) {
        return Refusal{RefusalKind::kCutViolation, v, a.to,
                       "labels of " + std::to_string(v) + " and " + std::to_string(a.to) +
                           " do not differ in exactly one coordinate"};
      }
      Vertex& slot = t.across_[std::size_t{v} * t.dim_ + diff.index];
      if (slot != kNone) {
        return Refusal{RefusalKind::kDuplicateAction, v, diff.index,
                       "vertex " + std::to_string(v) + " has two neighbors across coordinate " +
                           std::to_string(diff.index)};
      }
      slot = a.to;
    }
  }
  return t;
}

// Walk around a BFS spanning tree from vertex 0: 2n-1 visits, consecutive
// visits adjacent, starting and ending at vertex 0.
inline std::vector<Vertex> euler_tour(const Graph& g) {
  if (g.n() == 0) return {};
  BfsResult tree = bfs(g, 0);
  if (tree.order.size() != g.n()) throw std::invalid_argument("euler_tour needs a connected graph");
  std::vector<std::vector<Vertex>> children(g.n());
  for (Vertex v : tree.order) {
    if (tree.parent_edge[v] != kNone) children[g.edge(tree.parent_edge[v]).other(v)].push_back(v);
  }
  std::vector<Vertex> tour;
  tour.reserve(2 * g.n() - 1);
  std::vector<std::pair<Vertex, std::size_t>> stack{{0, 0}};
  tour.push_back(0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children[v].size()) {
      Vertex c = children[v][next++];
      tour.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) tour.push_back(stack.back().first);
    }
  }
  return tour;
}

// Oriented tree toward `root`: next[v] is the vertex reached by applying
// v's cursor token to v. next[root] == kNone.
struct OrientedTree {
  Vertex root = 0;
  std::vector<Vertex> next;

  // Number of edges from v to the root; kNone if the walk does not reach it.
  std::size_t path_length(Vertex v) const {
    std::size_t len = 0;
    while (v != root) {
      v = next[v];
      if (v == kNone || ++len > next.size()) return kNone;
    }
    return len;
  }
};

struct Phase2Stats {
  std::uint64_t total_steps = 0;            // tokens examined by all cursor searches
  std::vector<std::uint64_t> vertex_steps;  // same, per vertex
  std::size_t max_list_size = 0;            // |L| at traversal positions
  std::size_t tokens_listed = 0;            // initial tokens plus appended ones
  std::size_t advances = 0;
  std::size_t rescans = 0;

  std::uint64_t max_vertex_steps() const {
    return vertex_steps.empty() ? 0 : *std::max_element(vertex_steps.begin(), vertex_steps.end());
  }
  double steps_per_vertex() const {
    return vertex_steps.empty() ? 0.0 : static_cast<double>(total_steps) / static_cast<double>(vertex_steps.size());
  }
};

// Token list L (tokens whose target side holds the current root), per-vertex
// cursors p_v into L, and per-token cursor holders A_tau.
class TraversalState {
 public:
  Vertex root() const noexcept { return root_; }
  std::size_t list_size() const noexcept { return list_size_; }
  const Phase2Stats& stats() const noexcept { return stats_; }
  const ActionTable& table() const noexcept { return *table_; }

  // Tokens of L in list order.
  std::vector<Token> list() const {
    std::vector<Token> out;
    for (TokenId t = head_; t != kNone; t = next_[t]) out.push_back(Token::from_id(t));
    return out;
  }

  // Cursor token of v; nullopt-like kNone id for the root.
  TokenId cursor(Vertex v) const noexcept { return cursor_[v]; }
  std::size_t holders(Token t) const noexcept { return holders_[t.id()].size(); }

  friend Result<TraversalState> init_state(const Graph& g, const ActionTable& table, Vertex root);
  friend Check advance(TraversalState& s, Vertex next_root, std::ostream* trace);

 private:
  void push_back(TokenId t) {
    prev_[t] = tail_;
    next_[t] = kNone;
    if (tail_ != kNone) {
      next_[tail_] = t;
    } else {
      head_ = t;
    }
    tail_ = t;
    listed_[t] = 1;
    ++list_size_;
    ++stats_.tokens_listed;
  }

  void unlink(TokenId t) {
    if (prev_[t] != kNone) {
      next_[prev_[t]] = next_[t];
    } else {
      head_ = next_[t];
    }
    if (next_[t] != kNone) {
      prev_[next_[t]] = prev_[t];
    } else {
      tail_ = prev_[t];
    }
    prev_[t] = next_[t] = kNone;
    listed_[t] = 0;
    --list_size_;
  }

  void attach(Vertex v, TokenId t) {
    cursor_[v] = t;
    slot_[v] = static_cast<std::uint32_t>(holders_[t].size());
    holders_[t].push_back(v);
  }

  void detach(Vertex v) {
    TokenId t = cursor_[v];
    if (t == kNone) return;
    auto& h = holders_[t];
    Vertex last = h.back();
    h[slot_[v]] = last;
    slot_[last] = slot_[v];
    h.pop_back();
    cursor_[v] = kNone;
  }

  // First listed token at or after `from` acting on v; counts each token examined.
  TokenId scan(Vertex v, TokenId from) {
    for (TokenId t = from; t != kNone; t = next_[t]) {
      ++stats_.vertex_steps[v];
      ++stats_.total_steps;
      if (table_->acts(v, Token::from_id(t))) return t;
    }
    return kNone;
  }

  const ActionTable* table_ = nullptr;
  Vertex root_ = 0;
  TokenId head_ = kNone;
  TokenId tail_ = kNone;
  std::size_t list_size_ = 0;
  std::vector<TokenId> prev_, next_;
  std::vector<std::uint8_t> listed_;
  std::vector<TokenId> cursor_;
  std::vector<std::uint32_t> slot_;
  std::vector<std::vector<Vertex>> holders_;
  Phase2Stats stats_;
};

// L holds one token per coordinate, oriented toward root, in ascending
// coordinate order. Each cursor comes from a forward scan of L.
inline Result<TraversalState> init_state(const Graph& g, const ActionTable& table, Vertex root) {
  const std::size_t n = table.vertex_count();
  const std::size_t dim = table.dimension();
  if (g.n() != n) throw std::invalid_argument("action table built for a different graph");
  if (root >= n) throw std::out_of_range("init_state root out of range");
  TraversalState s;
  s.table_ = &table;
  s.root_ = root;
  s.prev_.assign(2 * dim, kNone);
  s.next_.assign(2 * dim, kNone);
  s.listed_.assign(2 * dim, 0);
  s.holders_.resize(2 * dim);
  s.cursor_.assign(n, kNone);
  s.slot_.assign(n, 0);
  s.stats_.vertex_steps.assign(n, 0);
  for (std::uint32_t c = 0; c < dim; ++c) {
    s.push_back(Token{c, static_cast<std::uint8_t>(table.bit(root, c))}.id());
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == root) continue;
    TokenId t = s.scan(v, s.head_);
    if (t == kNone) {
      return Refusal{RefusalKind::kNoActingToken, v, 0,
                     "no listed token acts on vertex " + std::to_string(v)};
    }
    s.attach(v, t);
  }
  s.stats_.max_list_size = s.list_size_;
  return s;
}

// Moves the root to an adjacent vertex.
inline Check advance(TraversalState& s, Vertex next_root, std::ostream* trace = nullptr) {
  const ActionTable& table = *s.table_;
  const Vertex r = s.root_;
  std::uint32_t coord = kNone;
  for (std::uint32_t c = 0; c < table.dimension(); ++c) {
    if (table.bit(r, c) != table.bit(next_root, c)) {
      if (coord != kNone) {
        coord = kNone;
        break;
      }
      coord = c;
    }
  }
  if (coord == kNone || table.across(r, coord) != next_root) {
    throw std::invalid_argument("advance: " + std::to_string(next_root) + " is not adjacent to the root");
  }

  const Token toward_new{coord, static_cast<std::uint8_t>(table.bit(next_root, coord))};
  const Token toward_old = toward_new.reversed();
  const TokenId tau = toward_new.id();
  const TokenId tau_old = toward_old.id();

  s.push_back(tau);
  s.attach(r, tau);
  s.detach(next_root);

  std::vector<Vertex> displaced = std::move(s.holders_[tau_old]);
  s.holders_[tau_old].clear();
  std::size_t rescans = 0;
  for (Vertex v : displaced) {
    s.cursor_[v] = kNone;
    TokenId t = s.scan(v, s.next_[tau_old]);
    if (t == kNone) {
      return Refusal{RefusalKind::kSearchExhausted, v, next_root,
                     "no token after the departed one acts on vertex " + std::to_string(v)};
    }
    s.attach(v, t);
    ++rescans;
  }
  s.unlink(tau_old);
  s.root_ = next_root;

  s.stats_.rescans += rescans;
  ++s.stats_.advances;
  s.stats_.max_list_size = std::max(s.stats_.max_list_size, s.list_size_);
  if (trace) {
    *trace << "advance " << r << " -> " << next_root << ": +(" << toward_new.coord << ","
           << int{toward_new.target_bit} << ") -(" << toward_old.coord << "," << int{toward_old.target_bit}
           << ") rescans=" << rescans << " steps=" << s.stats_.total_steps << '\n';
  }
  return Pass{};
}

inline OrientedTree extract_tree(const TraversalState& s) {
  OrientedTree tree;
  tree.root = s.root();
  const std::size_t n = s.table().vertex_count();
  tree.next.assign(n, kNone);
  for (Vertex v = 0; v < n; ++v) {
    if (v == tree.root) continue;
    tree.next[v] = s.table().act(v, Token::from_id(s.cursor(v)));
  }
  return tree;
}

struct VerifyOptions {
  std::ostream* trace = nullptr;
  // At every traversal position, re-derive each cursor by a full scan of L
  // and check the oriented tree against label Hamming distances. Costs
  // O(n^2 * dimension) per position; meant for tests.
  bool audit = false;
};

namespace detail {

inline void audit_position(const TraversalState& s, const SemicubeLabeling& lab) {
  const ActionTable& table = s.table();
  const std::vector<Token> list = s.list();
  for (Vertex v = 0; v < table.vertex_count(); ++v) {
    if (v == s.root()) continue;
    TokenId expected = kNone;
    for (const Token& t : list) {
      if (table.acts(v, t)) {
        expected = t.id();
        break;
      }
    }
    if (expected != s.cursor(v)) throw std::logic_error("cursor of " + std::to_string(v) + " is not the first acting token");
  }
  OrientedTree tree = extract_tree(s);
  for (Vertex v = 0; v < table.vertex_count(); ++v) {
    if (tree.path_length(v) != hamming_distance(lab.labels[v], lab.labels[s.root()])) {
      throw std::logic_error("oriented tree path of " + std::to_string(v) + " differs from Hamming distance");
    }
  }
}

}  // namespace detail

// Phase II. Accepts iff the token-list traversal visits every position of
// the Euler tour; acceptance certifies graph distance == Hamming distance.
inline Result<Phase2Stats> verify(const Graph& g, const SemicubeLabeling& lab, const EdgeClassPartition& part,
                                  const VerifyOptions& options = {}) {
  if (g.n() == 0) throw std::invalid_argument("verify: graph has no vertices");
  if (Check c = check_cut_partition(g, lab, part); !c) return c.refusal();
  if (!is_connected(g)) return Refusal{RefusalKind::kDisconnected, 0, 0, "graph is not connected"};
  Result<ActionTable> table = build_action_table(g, lab);
  if (!table) return table.refusal();

  const std::vector<Vertex> tour = euler_tour(g);
  Result<TraversalState> state = init_state(g, table.value(), tour.front());
  if (!state) return state.refusal();
  TraversalState& s = state.value();
  if (options.audit) detail::audit_position(s, lab);
  for (std::size_t k = 1; k < tour.size(); ++k) {
    if (Check c = advance(s, tour[k], options.trace); !c) return c.refusal();
    if (options.audit) detail::audit_position(s, lab);
  }
  return s.stats();
}

}  // namespace pcube
