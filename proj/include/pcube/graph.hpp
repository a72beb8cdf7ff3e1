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
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcube/disjoint_sets.hpp"
#include "pcube/result.hpp"

namespace pcube {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex to;
  EdgeId edge;
};

class GraphError : public std::invalid_argument {
 public:
  enum class Kind { kSelfLoop, kVertexOutOfRange };

  GraphError(Kind kind, Vertex vertex, const std::string& what)
      : std::invalid_argument(what), kind_(kind), vertex_(vertex) {}

  Kind kind() const noexcept { return kind_; }
  Vertex vertex() const noexcept { return vertex_; }

 private:
  Kind kind_;
  Vertex vertex_;
};

namespace detail {

// Groups parallel copies of the same unordered pair with two rounds of
// bucket sorting (by larger endpoint, then stably by smaller endpoint).
// Returns, for every edge, the index of the lowest-indexed edge in its group.
inline std::vector<std::uint32_t> group_parallel(std::size_t n, std::span<const Edge> edges) {
  const std::size_t m = edges.size();
  auto lo = [&](std::size_t i) { return std::min(edges[i].u, edges[i].v); };
  auto hi = [&](std::size_t i) { return std::max(edges[i].u, edges[i].v); };

  auto bucket_pass = [&](const std::vector<std::uint32_t>& in, auto key) {
    std::vector<std::uint32_t> start(n + 1, 0);
    for (std::uint32_t i : in) ++start[key(i) + 1];
    for (std::size_t b = 0; b < n; ++b) start[b + 1] += start[b];
    std::vector<std::uint32_t> out(in.size());
    for (std::uint32_t i : in) out[start[key(i)]++] = i;
    return out;
  };

  std::vector<std::uint32_t> order(m);
  for (std::uint32_t i = 0; i < m; ++i) order[i] = i;
  order = bucket_pass(order, hi);
  order = bucket_pass(order, lo);

  std::vector<std::uint32_t> leader(m);
  for (std::size_t k = 0; k < m;) {
    std::size_t j = k;
    while (j < m && lo(order[j]) == lo(order[k]) && hi(order[j]) == hi(order[k])) ++j;
    // Stable passes keep the group in increasing index order.
    for (std::size_t x = k; x < j; ++x) leader[order[x]] = order[k];
    k = j;
  }
  return leader;
}

}  // namespace detail

// Undirected simple graph over dense vertex ids 0..n-1 and edge ids 0..m-1,
// with CSR adjacency. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Builds a simple graph from vertex pairs. Repeated pairs (in either
  // orientation) collapse onto the first occurrence, which keeps its
  // orientation; edge ids follow first-occurrence order.
  static Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
      if (u >= n || v >= n) {
        Vertex bad = u >= n ? u : v;
        throw GraphError(GraphError::Kind::kVertexOutOfRange, bad,
                         "vertex " + std::to_string(bad) + " out of range for n=" + std::to_string(n));
      }
      if (u == v) {
        throw GraphError(GraphError::Kind::kSelfLoop, u, "self-loop at vertex " + std::to_string(u));
      }
      edges.push_back({u, v});
    }
    std::vector<std::uint32_t> leader = detail::group_parallel(n, edges);
    std::vector<Edge> unique;
    unique.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (leader[i] == i) unique.push_back(edges[i]);
    }
    return Graph(n, std::move(unique));
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Arc> neighbors(Vertex v) const noexcept {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

 private:
  friend struct GraphAccess;

  // Edges must already be simple; used by from_edge_list and contract.
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), offsets_(n + 1, 0) {
    for (const Edge& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
    arcs_.resize(2 * edges_.size());
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      arcs_[fill[e.u]++] = {e.v, id};
      arcs_[fill[e.v]++] = {e.u, id};
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Arc> arcs_;
};

struct GraphAccess {
  static Graph make_simple(std::size_t n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }
};

struct BfsResult {
  Vertex root = 0;
  std::vector<Vertex> order;
  std::vector<std::uint32_t> dist;         // kNone when unreached
  std::vector<EdgeId> parent_edge;         // kNone for the root and unreached vertices

  bool reached(Vertex v) const { return dist[v] != kNone; }
};

inline BfsResult bfs(const Graph& g, Vertex root) {
  if (root >= g.n()) throw std::out_of_range("bfs root out of range");
  BfsResult r;
  r.root = root;
  r.dist.assign(g.n(), kNone);
  r.parent_edge.assign(g.n(), kNone);
  r.order.reserve(g.n());
  r.dist[root] = 0;
  r.order.push_back(root);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    Vertex v = r.order[head];
    for (const Arc& a : g.neighbors(v)) {
      if (r.dist[a.to] == kNone) {
        r.dist[a.to] = r.dist[v] + 1;
        r.parent_edge[a.to] = a.edge;
        r.order.push_back(a.to);
      }
    }
  }
  return r;
}

inline bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  return bfs(g, 0).order.size() == g.n();
}

struct BipartiteCheck {
  bool bipartite = true;
  std::vector<std::uint8_t> side;   // per-vertex color when bipartite
  std::vector<Vertex> odd_cycle;    // closed walk witness, last vertex adjacent to the first
};

inline BipartiteCheck is_bipartite(const Graph& g) {
  BipartiteCheck out;
  const std::size_t n = g.n();
  std::vector<std::uint32_t> depth(n, kNone);
  std::vector<Vertex> parent(n, kNone);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    if (depth[s] != kNone) continue;
    depth[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (const Arc& a : g.neighbors(v)) {
        Vertex w = a.to;
        if (depth[w] == kNone) {
          depth[w] = depth[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (depth[w] % 2 == depth[v] % 2) {
          // Same BFS layer: climb both ends to their common ancestor.
          std::vector<Vertex> left{v}, right{w};
          Vertex x = v, y = w;
          while (x != y) {
            x = parent[x];
            y = parent[y];
            left.push_back(x);
            right.push_back(y);
          }
          right.pop_back();
          out.bipartite = false;
          out.odd_cycle = std::move(left);
          out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
          return out;
        }
      }
    }
  }
  out.side.resize(n);
  for (Vertex v = 0; v < n; ++v) out.side[v] = static_cast<std::uint8_t>(depth[v] % 2);
  return out;
}

// Lowest-id vertex among those of maximum degree.
inline Vertex max_degree_vertex(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("max_degree_vertex on empty graph");
  Vertex best = 0;
  for (Vertex v = 1; v < g.n(); ++v) {
    if (g.degree(v) > g.degree(best)) best = v;
  }
  return best;
}

enum class EdgeFate : std::uint8_t { kSurvived, kMerged, kContracted };

struct EdgeImage {
  EdgeFate fate;
  EdgeId target;  // contracted-graph edge; kNone when contracted away
};

struct ContractionMap {
  std::vector<Vertex> vertex_image;
  std::vector<EdgeImage> edge_image;
};

struct Contraction {
  Graph graph;
  ContractionMap map;
};

// Quotient of g by the flagged edges. Contracted vertices are numbered in
// order of their lowest original vertex; surviving edges keep original id
// order. Refuses when an unflagged edge would become a self-loop.
inline Result<Contraction> contract(const Graph& g, const std::vector<bool>& flagged) {
  if (flagged.size() != g.m()) throw std::invalid_argument("contract: flag count differs from edge count");
  const std::size_t n = g.n();
  DisjointSets components(n);
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (flagged[e]) components.unite(g.edge(e).u, g.edge(e).v);
  }

  ContractionMap map;
  map.vertex_image.assign(n, kNone);
  std::vector<Vertex> id_of_root(n, kNone);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    Vertex root = components.find(v);
    if (id_of_root[root] == kNone) id_of_root[root] = next++;
    map.vertex_image[v] = id_of_root[root];
  }

  std::vector<Edge> images;
  std::vector<EdgeId> source;
  map.edge_image.assign(g.m(), EdgeImage{EdgeFate::kContracted, kNone});
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (flagged[e]) continue;
    Vertex a = map.vertex_image[g.edge(e).u];
    Vertex b = map.vertex_image[g.edge(e).v];
    if (a == b) {
      return Refusal{RefusalKind::kUnlabeledSelfLoop, e, 0,
                     "edge " + std::to_string(e) + " collapses to a self-loop"};
    }
    images.push_back({a, b});
    source.push_back(e);
  }

  std::vector<std::uint32_t> leader = detail::group_parallel(next, images);
  std::vector<Edge> kept;
  std::vector<EdgeId> new_id(images.size(), kNone);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (leader[i] == i) {
      new_id[i] = static_cast<EdgeId>(kept.size());
      kept.push_back(images[i]);
      map.edge_image[source[i]] = {EdgeFate::kSurvived, new_id[i]};
    }
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (leader[i] != i) map.edge_image[source[i]] = {EdgeFate::kMerged, new_id[leader[i]]};
  }
  return Contraction{GraphAccess::make_simple(next, std::move(kept)), std::move(map)};
}

}  // namespace pcube
