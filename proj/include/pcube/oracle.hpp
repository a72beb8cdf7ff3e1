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
#include <vector>

#include "pcube/bitvec.hpp"
#include "pcube/disjoint_sets.hpp"
#include "pcube/graph.hpp"
#include "pcube/labeler.hpp"

// Slow, direct recognition from the Winkler relation. Kept independent of
// the labeler and verifier so the two can be cross-checked.
namespace pcube::oracle {

class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kNone) {}

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(Vertex a, Vertex b) const noexcept { return d_[std::size_t{a} * n_ + b]; }
  std::uint32_t& at(Vertex a, Vertex b) noexcept { return d_[std::size_t{a} * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> d_;
};

// One BFS per source. Unreachable pairs hold kNone.
inline DistanceMatrix apsp_bfs(const Graph& g) {
  DistanceMatrix d(g.n());
  for (Vertex s = 0; s < g.n(); ++s) {
    BfsResult r = bfs(g, s);
    for (Vertex t = 0; t < g.n(); ++t) d.at(s, t) = r.dist[t];
  }
  return d;
}

// pq ~ rs  iff  d(p,r) + d(q,s) != d(p,s) + d(q,r)
inline bool winkler_related(const DistanceMatrix& d, Edge e, Edge f) {
  const std::uint64_t lhs = std::uint64_t{d(e.u, f.u)} + d(e.v, f.v);
  const std::uint64_t rhs = std::uint64_t{d(e.u, f.v)} + d(e.v, f.u);
  return lhs != rhs;
}

struct BruteForceClasses {
  bool partial_cube = false;
  std::vector<std::vector<EdgeId>> classes;  // ordered by lowest edge id
};

// Connected, bipartite, and ~ transitive. Classes are built by uniting
// related edges; the relation is an equivalence iff every pair inside a
// class is related.
inline BruteForceClasses winkler_classes(const Graph& g) {
  BruteForceClasses out;
  if (g.n() == 0 || !is_connected(g) || !is_bipartite(g).bipartite) return out;
  const DistanceMatrix d = apsp_bfs(g);
  const std::size_t m = g.m();
  DisjointSets sets(m);
  for (EdgeId a = 0; a < m; ++a) {
    for (EdgeId b = a + 1; b < m; ++b) {
      if (winkler_related(d, g.edge(a), g.edge(b))) sets.unite(a, b);
    }
  }
  std::vector<std::uint32_t> class_of_root(m, kNone);
  for (EdgeId e = 0; e < m; ++e) {
    std::uint32_t r = sets.find(e);
    if (class_of_root[r] == kNone) {
      class_of_root[r] = static_cast<std::uint32_t>(out.classes.size());
      out.classes.emplace_back();
    }
    out.classes[class_of_root[r]].push_back(e);
  }
  for (const auto& cls : out.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (!winkler_related(d, g.edge(cls[i]), g.edge(cls[j]))) return out;
      }
    }
  }
  out.partial_cube = true;
  return out;
}

inline bool is_partial_cube_bruteforce(const Graph& g) { return winkler_classes(g).partial_cube; }

// One coordinate per class with representative edge (p, q) = the class's
// lowest edge id in stored orientation; bit v is 0 iff v is nearer to p.
inline SemicubeLabeling label_bruteforce(const Graph& g) {
  BruteForceClasses wc = winkler_classes(g);
  SemicubeLabeling lab;
  if (!wc.partial_cube) return lab;
  const DistanceMatrix d = apsp_bfs(g);
  lab.dimension = wc.classes.size();
  lab.labels.assign(g.n(), BitVector::zero(lab.dimension));
  for (std::size_t c = 0; c < wc.classes.size(); ++c) {
    const Edge rep = g.edge(wc.classes[c].front());
    for (Vertex v = 0; v < g.n(); ++v) {
      if (d(v, rep.u) > d(v, rep.v)) lab.labels[v].set_bit(c);
    }
  }
  return lab;
}

// Graph distance equals label Hamming distance for every pair.
inline bool hamming_check(const Graph& g, const SemicubeLabeling& lab) {
  if (lab.labels.size() != g.n()) return false;
  for (const BitVector& b : lab.labels) {
    if (b.size() != lab.dimension) return false;
  }
  for (Vertex s = 0; s < g.n(); ++s) {
    BfsResult r = bfs(g, s);
    for (Vertex t = 0; t < g.n(); ++t) {
      if (r.dist[t] == kNone || r.dist[t] != hamming_distance(lab.labels[s], lab.labels[t])) return false;
    }
  }
  return true;
}

// Same labeling up to a permutation of coordinates and per-coordinate
// complement: compare the multisets of coordinate columns, each normalized
// so that vertex 0 reads 0.
inline bool equivalent_up_to_cube_symmetry(const SemicubeLabeling& a, const SemicubeLabeling& b) {
  if (a.dimension != b.dimension || a.labels.size() != b.labels.size()) return false;
  const std::size_t n = a.labels.size();
  auto columns = [n](const SemicubeLabeling& lab) {
    std::vector<std::vector<bool>> cols(lab.dimension, std::vector<bool>(n));
    for (std::size_t c = 0; c < lab.dimension; ++c) {
      const bool flip = n > 0 && lab.labels[0].test(c);
      for (std::size_t v = 0; v < n; ++v) cols[c][v] = lab.labels[v].test(c) != flip;
    }
    std::sort(cols.begin(), cols.end());
    return cols;
  };
  return columns(a) == columns(b);
}

}  // namespace pcube::oracle
