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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcube/bitvec.hpp"
#include "pcube/disjoint_sets.hpp"
#include "pcube/graph.hpp"
#include "pcube/result.hpp"

namespace pcube {

// Vertex labels; bit i of a label is 1 iff the vertex lies on the 1-side of
// edge class i.
struct SemicubeLabeling {
  std::size_t dimension = 0;
  std::vector<BitVector> labels;
};

// Partition of original edge ids into classes, each class owning one label
// coordinate. Built incrementally by the labeler through unite/assign, then
// frozen by finalize().
class EdgeClassPartition {
 public:
  EdgeClassPartition() = default;
  explicit EdgeClassPartition(std::size_t edge_count)
      : sets_(edge_count), class_coordinate_(edge_count, kNone) {}

  // Partition given directly as a coordinate per edge.
  static EdgeClassPartition from_coordinates(std::span<const std::uint32_t> coordinate_of_edge, std::size_t dimension) {
    EdgeClassPartition p(coordinate_of_edge.size());
    std::vector<EdgeId> first(dimension, kNone);
    for (EdgeId e = 0; e < coordinate_of_edge.size(); ++e) {
      std::uint32_t c = coordinate_of_edge[e];
      if (c >= dimension) throw std::out_of_range("edge coordinate exceeds dimension");
      if (first[c] == kNone) {
        first[c] = e;
      } else {
        p.sets_.unite(first[c], e);
      }
    }
    for (std::uint32_t c = 0; c < dimension; ++c) {
      if (first[c] != kNone) p.assign(first[c], c);
    }
    p.finalize(dimension);
    return p;
  }

  void unite(EdgeId a, EdgeId b) {
    std::uint32_t ra = sets_.find(a);
    std::uint32_t rb = sets_.find(b);
    if (ra == rb) return;
    std::uint32_t coordinate = class_coordinate_[ra] != kNone ? class_coordinate_[ra] : class_coordinate_[rb];
    std::uint32_t root = sets_.unite(ra, rb);
    class_coordinate_[root] = coordinate;
  }

  void assign(EdgeId member, std::uint32_t coordinate) { class_coordinate_[sets_.find(member)] = coordinate; }

  void finalize(std::size_t dimension) {
    dimension_ = dimension;
    coordinate_of_edge_.resize(sets_.size());
    for (EdgeId e = 0; e < sets_.size(); ++e) coordinate_of_edge_[e] = class_coordinate_[sets_.find(e)];
  }

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t edge_count() const noexcept { return coordinate_of_edge_.size(); }

  // kNone for an edge never assigned to a class.
  std::uint32_t coordinate(EdgeId e) const { return coordinate_of_edge_[e]; }
  std::span<const std::uint32_t> coordinates() const noexcept { return coordinate_of_edge_; }

  std::vector<std::vector<EdgeId>> classes() const {
    std::vector<std::vector<EdgeId>> out(dimension_);
    for (EdgeId e = 0; e < coordinate_of_edge_.size(); ++e) {
      if (coordinate_of_edge_[e] != kNone) out[coordinate_of_edge_[e]].push_back(e);
    }
    return out;
  }

 private:
  DisjointSets sets_;
  std::vector<std::uint32_t> class_coordinate_;  // indexed by set root
  std::vector<std::uint32_t> coordinate_of_edge_;
  std::size_t dimension_ = 0;
};

// Connected, bipartite, and within the m <= n log2 n edge bound.
inline Check precheck(const Graph& g) {
  if (!is_connected(g)) return Refusal{RefusalKind::kDisconnected, 0, 0, "graph is not connected"};
  const double n = static_cast<double>(g.n());
  const double bound = g.n() <= 1 ? 0.0 : n * std::log2(n);
  if (static_cast<double>(g.m()) > bound) {
    return Refusal{RefusalKind::kEdgeBound, g.m(), g.n(),
                   std::to_string(g.m()) + " edges exceed n*log2(n) for n=" + std::to_string(g.n())};
  }
  BipartiteCheck b = is_bipartite(g);
  if (!b.bipartite) {
    return Refusal{RefusalKind::kOddCycle, b.odd_cycle.size(), b.odd_cycle.front(),
                   "odd cycle of length " + std::to_string(b.odd_cycle.size())};
  }
  return Pass{};
}

// One multi-class BFS round from p, within the current (possibly
// contracted) graph.
struct RoundResult {
  Vertex root = 0;
  std::size_t d = 0;
  std::vector<std::vector<EdgeId>> classes;  // classes[i] = edges of class [p q_i]
  BitMatrix vertex_bits;                     // row v = D_v, d bits wide
  std::vector<EdgeId> unlabeled;             // edges with D_u == D_v
  std::uint64_t word_ops = 0;
};

// Bit i of D_v ends up set iff v has a shortest path to p through the i-th
// neighbor of p. An edge whose endpoint bit sets differ in two or more
// positions refutes the partial cube property.
inline Result<RoundResult> find_classes_at_vertex(const Graph& g, Vertex p) {
  RoundResult r;
  r.root = p;
  r.d = g.degree(p);
  r.vertex_bits = BitMatrix(g.n(), r.d);
  BitMatrix& bits = r.vertex_bits;
  const std::uint64_t stride = bits.stride();

  auto neighbors = g.neighbors(p);
  for (std::size_t i = 0; i < neighbors.size(); ++i) bits.set(neighbors[i].to, i);

  BfsResult tree = bfs(g, p);
  for (Vertex v : tree.order) {
    for (const Arc& a : g.neighbors(v)) {
      if (tree.dist[a.to] == tree.dist[v] + 1) {
        bits.or_row(a.to, v);
        r.word_ops += stride;
      }
    }
  }

  r.classes.resize(r.d);
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& edge = g.edge(e);
    BitClass c = bits.classify_difference(edge.u, edge.v);
    r.word_ops += stride;
    switch (c.kind) {
      case BitClass::Kind::kAllZero:
        r.unlabeled.push_back(e);
        break;
      case BitClass::Kind::kExactlyOne:
        r.classes[c.index].push_back(e);
        break;
      case BitClass::Kind::kMany:
        return Refusal{RefusalKind::kMultiBitEdge, edge.u, edge.v,
                       "edge (" + std::to_string(edge.u) + "," + std::to_string(edge.v) +
                           ") lies in several classes"};
    }
  }
  return r;
}

struct RoundRecord {
  Vertex root;            // in the graph of this round
  std::size_t vertices;   // size of the graph this round worked on
  std::size_t edges;
  std::size_t classes;    // d
  std::size_t unlabeled;
};

struct Phase1Stats {
  std::vector<RoundRecord> rounds;
  std::uint64_t word_ops = 0;

  std::size_t round_count() const noexcept { return rounds.size(); }

  // BFS passes needed if each pass may only carry word_cap bits per vertex.
  std::size_t passes(std::size_t word_cap) const {
    if (word_cap == 0) throw std::invalid_argument("word cap must be positive");
    std::size_t total = 0;
    for (const RoundRecord& r : rounds) total += (r.classes + word_cap - 1) / word_cap;
    return total;
  }
};

struct LabelingOutput {
  SemicubeLabeling labeling;
  EdgeClassPartition partition;
  Phase1Stats stats;
};

// Phase I: repeated multi-class BFS plus contraction until one vertex is
// left. Coordinates are numbered round-major, neighbor-index-minor.
inline Result<LabelingOutput> label_all(const Graph& g, Phase1Stats* stats_out = nullptr) {
  if (g.n() == 0) throw std::invalid_argument("label_all: graph has no vertices");
  if (Check c = precheck(g); !c) return c.refusal();

  const std::size_t n = g.n();
  LabelingOutput out;
  out.partition = EdgeClassPartition(g.m());
  Phase1Stats& stats = out.stats;

  Graph current = g;
  std::vector<EdgeId> representative(g.m());  // current edge -> original edge
  std::iota(representative.begin(), representative.end(), EdgeId{0});
  std::vector<Vertex> image(n);  // original vertex -> current vertex
  std::iota(image.begin(), image.end(), Vertex{0});
  std::vector<std::vector<Word>> label_words(n);

  std::size_t budget = n - 1;
  std::size_t offset = 0;
  auto refuse = [&](Refusal r) -> Result<LabelingOutput> {
    if (stats_out) *stats_out = stats;
    return r;
  };

  while (current.n() > 1) {
    const Vertex p = max_degree_vertex(current);
    const std::size_t d = current.degree(p);
    if (d > budget) {
      return refuse(Refusal{RefusalKind::kBudgetExceeded, d, budget,
                            "degree " + std::to_string(d) + " exceeds remaining class budget " +
                                std::to_string(budget)});
    }
    Result<RoundResult> round = find_classes_at_vertex(current, p);
    if (!round) return refuse(round.refusal());
    const RoundResult& rr = round.value();
    stats.word_ops += rr.word_ops;

    std::vector<bool> labeled(current.m(), false);
    for (std::size_t i = 0; i < d; ++i) {
      const auto& cls = rr.classes[i];
      for (EdgeId e : cls) {
        labeled[e] = true;
        out.partition.unite(representative[cls.front()], representative[e]);
      }
      out.partition.assign(representative[cls.front()], static_cast<std::uint32_t>(offset + i));
    }

    const std::size_t width = words_for(offset + d);
    for (Vertex v = 0; v < n; ++v) {
      if (label_words[v].size() < width) label_words[v].resize(width, 0);
      detail::deposit_bits(label_words[v], offset, rr.vertex_bits.row(image[v]), d);
    }
    stats.word_ops += n * rr.vertex_bits.stride();

    Result<Contraction> contracted = contract(current, labeled);
    if (!contracted) {
      Refusal r = contracted.refusal();
      r.first = representative[r.first];
      r.detail = "original edge " + std::to_string(r.first) + " collapses to a self-loop";
      return refuse(std::move(r));
    }
    Contraction& next = contracted.value();

    std::vector<EdgeId> next_representative(next.graph.m(), kNone);
    for (EdgeId e = 0; e < current.m(); ++e) {
      const EdgeImage& im = next.map.edge_image[e];
      if (im.fate == EdgeFate::kSurvived) next_representative[im.target] = representative[e];
    }
    for (EdgeId e = 0; e < current.m(); ++e) {
      const EdgeImage& im = next.map.edge_image[e];
      if (im.fate == EdgeFate::kMerged) out.partition.unite(representative[e], next_representative[im.target]);
    }
    for (Vertex v = 0; v < n; ++v) image[v] = next.map.vertex_image[image[v]];

    stats.rounds.push_back({p, current.n(), current.m(), d, rr.unlabeled.size()});
    current = std::move(next.graph);
    representative = std::move(next_representative);
    budget -= d;
    offset += d;
  }

  out.labeling.dimension = offset;
  out.labeling.labels.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    label_words[v].resize(words_for(offset), 0);
    out.labeling.labels.push_back(BitVector::from_words(offset, label_words[v]));
  }
  out.partition.finalize(offset);
  if (stats_out) *stats_out = stats;
  return out;
}

}  // namespace pcube
