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
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pcube/bitvec.hpp"
#include "pcube/graph.hpp"

namespace pcube::gen {

// Seeded randomness with a fixed, documented stream: std::mt19937_64 (its
// output sequence is pinned by the C++ standard) plus bounded draws by
// rejection and a textbook Fisher-Yates shuffle, so generated graphs do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

// Vertex id = coordinate word; edges in (vertex, ascending bit) order.
inline Graph hypercube(unsigned d) {
  if (d > 20) throw std::invalid_argument("hypercube dimension must be at most 20");
  const std::size_t n = std::size_t{1} << d;
  Pairs pairs;
  pairs.reserve(d * n / 2);
  for (Vertex v = 0; v < n; ++v) {
    for (unsigned b = 0; b < d; ++b) {
      Vertex w = v ^ (Vertex{1} << b);
      if (v < w) pairs.emplace_back(v, w);
    }
  }
  return Graph::from_edge_list(n, pairs);
}

inline Graph path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path needs at least one vertex");
  Pairs pairs;
  for (Vertex v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, pairs);
}

inline Graph even_cycle(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("even_cycle needs an even length of at least 4");
  Pairs pairs;
  for (Vertex v = 0; v < n; ++v) pairs.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edge_list(n, pairs);
}

// Center 0 with n-1 leaves.
inline Graph star(std::size_t n) {
  if (n == 0) throw std::invalid_argument("star needs at least one vertex");
  Pairs pairs;
  for (Vertex v = 1; v < n; ++v) pairs.emplace_back(0, v);
  return Graph::from_edge_list(n, pairs);
}

// Sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("complete_bipartite needs two nonempty sides");
  Pairs pairs;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) pairs.emplace_back(u, static_cast<Vertex>(a + v));
  }
  return Graph::from_edge_list(a + b, pairs);
}

// Uniform random balanced parenthesis word with n-1 pairs: shuffle n-1 up
// steps and n down steps, then rotate to start right after the first
// minimum of the prefix sums (cycle lemma) and drop the final down step.
inline std::vector<bool> random_dyck_word(std::size_t pairs, Rng& rng) {
  std::vector<std::int8_t> steps(2 * pairs + 1, -1);
  std::fill(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(pairs), std::int8_t{1});
  rng.shuffle(std::span<std::int8_t>(steps));
  std::ptrdiff_t sum = 0, best = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    sum += steps[i];
    if (sum < best) {
      best = sum;
      start = i + 1;
    }
  }
  std::vector<bool> word;
  word.reserve(2 * pairs);
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) word.push_back(steps[(start + k) % steps.size()] > 0);
  return word;
}

// Uniform random rooted ordered tree (Catalan distribution). Vertex 0 is
// the root, the rest are numbered in preorder.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_tree needs at least one vertex");
  Rng rng(seed);
  std::vector<bool> word = random_dyck_word(n - 1, rng);
  Pairs pairs;
  pairs.reserve(n - 1);
  std::vector<Vertex> stack{0};
  Vertex next = 1;
  for (bool open : word) {
    if (open) {
      pairs.emplace_back(stack.back(), next);
      stack.push_back(next++);
    } else {
      stack.pop_back();
    }
  }
  return Graph::from_edge_list(n, pairs);
}

class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// State graph of the antimatroid spanned by k random permutations of t
// items: feasible sets are unions of one prefix per permutation, adjacent
// when they differ in one item. Sets are explored breadth-first from the
// empty set; from a set S, permutation i contributes S + {first item of
// P_i missing from S}. Vertex ids follow discovery order.
inline Graph permutation_antimatroid(std::size_t k, std::size_t t, std::uint64_t seed,
                                     std::size_t vertex_cap = std::size_t{1} << 20) {
  if (k == 0 || t == 0) throw std::invalid_argument("permutation_antimatroid needs k >= 1 and t >= 1");
  Rng rng(seed);
  std::vector<std::vector<std::uint32_t>> perms(k, std::vector<std::uint32_t>(t));
  for (auto& p : perms) {
    std::iota(p.begin(), p.end(), std::uint32_t{0});
    rng.shuffle(std::span<std::uint32_t>(p));
  }

  std::unordered_map<BitVector, Vertex> id;
  std::vector<BitVector> states{BitVector::zero(t)};
  id.emplace(states.front(), 0);
  Pairs pairs;
  std::vector<std::uint32_t> additions;
  for (std::size_t head = 0; head < states.size(); ++head) {
    additions.clear();
    for (const auto& p : perms) {
      for (std::uint32_t item : p) {
        if (!states[head].test(item)) {
          additions.push_back(item);
          break;
        }
      }
    }
    std::sort(additions.begin(), additions.end());
    additions.erase(std::unique(additions.begin(), additions.end()), additions.end());
    for (std::uint32_t item : additions) {
      BitVector grown = states[head];
      grown.set_bit(item);
      auto [it, inserted] = id.emplace(grown, static_cast<Vertex>(states.size()));
      if (inserted) {
        if (states.size() >= vertex_cap) {
          throw SizeLimitExceeded("antimatroid exceeds vertex cap of " + std::to_string(vertex_cap));
        }
        states.push_back(std::move(grown));
      }
      pairs.emplace_back(static_cast<Vertex>(head), it->second);
    }
  }
  return Graph::from_edge_list(states.size(), pairs);
}

enum class PerturbOp { kDeleteEdge, kAddEdge };

// One seeded random edit: drop a uniform edge, or add a uniform non-edge.
inline Graph perturb(const Graph& g, PerturbOp op, std::uint64_t seed) {
  Rng rng(seed);
  Pairs pairs = g.edge_pairs();
  if (op == PerturbOp::kDeleteEdge) {
    if (pairs.empty()) throw std::invalid_argument("perturb: no edge to delete");
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(rng.below(pairs.size())));
    return Graph::from_edge_list(g.n(), pairs);
  }
  std::unordered_set<std::uint64_t> present;
  for (const Edge& e : g.edges()) {
    present.insert((std::uint64_t{std::min(e.u, e.v)} << 32) | std::max(e.u, e.v));
  }
  std::vector<std::pair<Vertex, Vertex>> candidates;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!present.count((std::uint64_t{u} << 32) | v)) candidates.emplace_back(u, v);
    }
  }
  if (candidates.empty()) throw std::invalid_argument("perturb: graph is complete");
  pairs.push_back(candidates[rng.below(candidates.size())]);
  return Graph::from_edge_list(g.n(), pairs);
}

// Random connected graph: a random recursive tree (vertex v attaches to a
// uniform earlier vertex) plus up to `extra` uniform additional edges.
inline Graph random_connected(std::size_t n, std::size_t extra, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_connected needs at least one vertex");
  Rng rng(seed);
  Pairs pairs;
  for (Vertex v = 1; v < n; ++v) pairs.emplace_back(static_cast<Vertex>(rng.below(v)), v);
  if (n >= 2) {
    for (std::size_t i = 0; i < extra; ++i) {
      Vertex u = static_cast<Vertex>(rng.below(n));
      Vertex v = static_cast<Vertex>(rng.below(n));
      if (u != v) pairs.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, pairs);
}

}  // namespace pcube::gen
