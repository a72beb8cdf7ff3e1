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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "test_graphs.hpp"

namespace pcube {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note.str("");
    pass = false;
    note << why;
  }
};

// Counter bounds, checked on every pipeline run the suite performs.
struct BoundLedger {
  std::size_t runs = 0;
  std::size_t phase2_runs = 0;
  std::size_t violations = 0;
  std::string first_violation;

  void violate(const std::string& what) {
    if (violations++ == 0) first_violation = what;
  }
};

BoundLedger& ledger() {
  static BoundLedger l;
  return l;
}

Recognition run(const Graph& g) {
  Recognition r = recognize(g);
  BoundLedger& l = ledger();
  ++l.runs;
  const std::size_t n = g.n();
  std::size_t classes = 0;
  for (const RoundRecord& rec : r.phase1.rounds) classes += rec.classes;
  if (n > 0 && classes > n - 1) {
    l.violate("class count " + std::to_string(classes) + " > n-1 at n=" + std::to_string(n));
  }
  if (r.partial_cube) {
    ++l.phase2_runs;
    if (r.phase2.max_vertex_steps() > 3 * n - 2) {
      l.violate("per-vertex steps " + std::to_string(r.phase2.max_vertex_steps()) + " > 3n-2 at n=" +
                std::to_string(n));
    }
    if (n > 1 && r.phase2.max_list_size > n - 1) {
      l.violate("|L| " + std::to_string(r.phase2.max_list_size) + " > n-1 at n=" + std::to_string(n));
    }
  }
  return r;
}

bool agrees(const Graph& g, std::string* why) {
  const bool expected = oracle::is_partial_cube_bruteforce(g);
  Recognition r = run(g);
  if (r.partial_cube == expected) return true;
  std::ostringstream s;
  s << "n=" << g.n() << " m=" << g.m() << " pipeline=" << r.partial_cube << " oracle=" << expected;
  *why = s.str();
  return false;
}

void report(int id, const std::string& title, const Outcome& o, bool& all) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << title << "): " << o.note.str()
            << std::endl;
  all &= o.pass;
}

Outcome verdict_correctness() {
  Outcome o;
  std::size_t checked = 0, disagreements = 0;
  std::string first;
  auto check = [&](const Graph& g) {
    ++checked;
    std::string why;
    if (!agrees(g, &why)) {
      if (disagreements++ == 0) first = why;
    }
  };
  for (std::size_t n = 1; n <= 7; ++n) {
    testing::for_each_connected_graph(n, check);
  }
  const std::size_t enumerated = checked;
  for (const Graph& g : cli::small_family_corpus(12, 2026)) check(g);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph base = seed % 2 ? gen::permutation_antimatroid(2 + seed % 3, 5, seed) : gen::random_tree(12, seed);
    check(base);
    check(gen::perturb(base, gen::PerturbOp::kDeleteEdge, seed));
    check(gen::perturb(base, gen::PerturbOp::kAddEdge, seed));
  }
  o.note << checked << " graphs (" << enumerated << " connected graphs with n<=7, plus families and perturbations), "
         << disagreements << " disagreements";
  if (disagreements > 0) o.fail(std::to_string(disagreements) + " disagreements; first: " + first);
  return o;
}

Outcome labeling_validity() {
  Outcome o;
  std::size_t accepted = 0, violations = 0;
  std::string first;
  auto check = [&](const Graph& g, const std::string& name) {
    Recognition r = run(g);
    if (!r.partial_cube) return;
    ++accepted;
    if (!oracle::hamming_check(g, r.labeling)) {
      if (violations++ == 0) first = name;
    }
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    testing::for_each_connected_graph(n, [&](const Graph& g) { check(g, "enumerated n=" + std::to_string(n)); });
  }
  for (unsigned d = 0; d <= 8; ++d) check(gen::hypercube(d), "Q" + std::to_string(d));
  for (std::size_t n : {2u, 17u, 64u, 128u, 256u}) {
    check(gen::path(n), "path " + std::to_string(n));
    check(gen::star(n), "star " + std::to_string(n));
    if (n % 2 == 0 && n >= 4) check(gen::even_cycle(n), "cycle " + std::to_string(n));
    for (std::uint64_t seed = 0; seed < 5; ++seed) check(gen::random_tree(n, seed), "tree " + std::to_string(n));
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    try {
      Graph g = gen::permutation_antimatroid(2 + seed % 3, 6 + seed % 9, seed, 256);
      check(g, "antimatroid seed " + std::to_string(seed));
    } catch (const gen::SizeLimitExceeded&) {
      // Over 256 vertices; out of scope for the exhaustive check.
    }
  }
  o.note << accepted << " accepted graphs with n<=256, " << violations << " Hamming/BFS violations";
  if (violations > 0) o.fail(std::to_string(violations) + " violations; first: " + first);
  return o;
}

Outcome known_answers() {
  Outcome o;
  std::vector<std::string> failures;
  if (run(gen::complete_bipartite(2, 3)).partial_cube) failures.push_back("K2,3 accepted");
  std::size_t trees = 0;
  for (std::size_t n : {1u, 2u, 3u, 10u, 50u, 100u, 300u}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Recognition r = run(gen::random_tree(n, seed));
      ++trees;
      if (!r.partial_cube || r.labeling.dimension != n - 1) {
        failures.push_back("tree n=" + std::to_string(n) + " seed=" + std::to_string(seed));
      }
    }
    Recognition star = run(gen::star(n));
    if (!star.partial_cube || star.labeling.dimension != n - 1) failures.push_back("star n=" + std::to_string(n));
  }
  for (unsigned d = 0; d <= 12; ++d) {
    Recognition r = run(gen::hypercube(d));
    if (!r.partial_cube || r.labeling.dimension != d) failures.push_back("Q" + std::to_string(d));
  }
  oracle::DistanceMatrix p4 = oracle::apsp_bfs(gen::path(4));
  oracle::DistanceMatrix c4 = oracle::apsp_bfs(testing::cycle(4));
  const bool p4_ok = p4(0, 2) + p4(1, 3) == 4 && p4(0, 3) + p4(1, 2) == 4 && !oracle::winkler_related(p4, {0, 1}, {2, 3});
  const bool c4_ok = oracle::winkler_related(c4, {0, 1}, {2, 3});
  if (!p4_ok) failures.push_back("P4 relation values");
  if (!c4_ok) failures.push_back("C4 relation values");
  o.note << "K2,3 rejected; " << trees << " trees and stars with dim n-1; Q0..Q12 with dim d; "
         << "P4: 2+2 = 3+1 so pq !~ rs; C4: 2+2 != 1+1 so pq ~ rs";
  if (!failures.empty()) {
    std::string all;
    for (const std::string& f : failures) all += (all.empty() ? "" : ", ") + f;
    o.fail("wrong answers: " + all);
  }
  return o;
}

Outcome step_bounds() {
  // Extra larger instances on top of every run made so far.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    run(gen::permutation_antimatroid(3, 20, seed));
    run(gen::permutation_antimatroid(5, 15, seed));
    run(gen::random_tree(1000, seed));
  }
  run(gen::hypercube(10));
  Outcome o;
  const BoundLedger& l = ledger();
  o.note << l.runs << " pipeline runs (" << l.phase2_runs << " through Phase II), " << l.violations
         << " bound violations";
  if (l.violations > 0) o.fail(std::to_string(l.violations) + " violations; first: " + l.first_violation);
  return o;
}

Outcome tree_trend() {
  Outcome o;
  const std::size_t sizes[] = {50, 100, 200, 400, 800};
  double previous = 0;
  double rounds_at_100 = 0;
  for (std::size_t n : sizes) {
    double steps = 0, rounds = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Recognition r = run(gen::random_tree(n, seed));
      if (!r.partial_cube) o.fail("tree n=" + std::to_string(n) + " refused; ");
      steps += r.phase2.steps_per_vertex();
      rounds += static_cast<double>(r.phase1.round_count());
    }
    steps /= 10;
    rounds /= 10;
    const double target = (static_cast<double>(n) - 1) / 2;
    o.note << "n=" << n << " steps/vertex=" << steps << " rounds=" << rounds << "; ";
    if (std::abs(steps - target) > 0.15 * target) {
      o.fail("n=" + std::to_string(n) + " steps/vertex " + std::to_string(steps) + " outside (n-1)/2 +-15%");
    }
    if (previous > 0 && std::abs(steps / previous - 2.0) > 0.3) {
      o.fail("steps/vertex not doubling at n=" + std::to_string(n));
    }
    if (n == 100) rounds_at_100 = rounds;
    if (rounds >= static_cast<double>(n)) o.fail("rounds not below n at n=" + std::to_string(n));
    previous = steps;
  }
  if (rounds_at_100 > 28.0) o.fail("mean rounds at n=100 is " + std::to_string(rounds_at_100) + " > 28");
  return o;
}

Outcome antimatroid_sizes() {
  Outcome o;
  struct Cell {
    std::size_t k, t;
    double vertices, edges;
  };
  const Cell cells[] = {{2, 15, 76.0, 135.0}, {3, 15, 194.3, 470.6}, {2, 40, 465.6, 889.2}};
  for (const Cell& c : cells) {
    double v = 0, e = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Graph g = gen::permutation_antimatroid(c.k, c.t, seed);
      v += static_cast<double>(g.n());
      e += static_cast<double>(g.m());
    }
    v /= 10;
    e /= 10;
    o.note << "(" << c.k << "," << c.t << "): |V|=" << v << " vs " << c.vertices << ", |E|=" << e << " vs "
           << c.edges << "; ";
    if (std::abs(v - c.vertices) > 0.25 * c.vertices || std::abs(e - c.edges) > 0.25 * c.edges) {
      std::ostringstream s;
      s << "(" << c.k << "," << c.t << ") mean size " << v << "/" << e << " outside 25% of " << c.vertices << "/"
        << c.edges;
      o.fail(s.str());
    }
  }
  return o;
}

Outcome path_scaling() {
  Outcome o;
  double previous_work = 0;
  double wall_at_4000 = 0;
  for (std::size_t n : {1000u, 2000u, 4000u}) {
    const auto start = std::chrono::steady_clock::now();
    Recognition r = run(gen::path(n));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!r.partial_cube) o.fail("path " + std::to_string(n) + " refused");
    const double work = static_cast<double>(r.phase1.word_ops + r.phase2.total_steps);
    o.note << "n=" << n << " work=" << work << " time=" << secs << "s";
    if (previous_work > 0) {
      const double ratio = work / previous_work;
      o.note << " ratio=" << ratio;
      if (ratio < 4.0 / 1.5 || ratio > 4.0 * 1.5) {
        o.fail("work ratio " + std::to_string(ratio) + " at n=" + std::to_string(n));
      }
    }
    o.note << "; ";
    previous_work = work;
    if (n == 4000) wall_at_4000 = secs;
  }
  if (wall_at_4000 >= 10.0) o.fail("n=4000 took " + std::to_string(wall_at_4000) + " s");
  return o;
}

Outcome edge_bound_refusal() {
  Outcome o;
  for (std::size_t side : {9u, 20u, 64u}) {
    Graph g = gen::complete_bipartite(side, side);
    Recognition r = run(g);
    const double bound = static_cast<double>(g.n()) * std::log2(static_cast<double>(g.n()));
    o.note << "K" << side << "," << side << " m=" << g.m() << " > " << bound << ": ";
    if (static_cast<double>(g.m()) <= bound) o.fail("instance does not exceed the bound");
    if (r.partial_cube || !r.refusal || r.refusal->kind != RefusalKind::kEdgeBound) {
      o.fail("K" + std::to_string(side) + "," + std::to_string(side) + " not refused by the edge bound");
    } else if (r.phase1.round_count() != 0 || r.phase1.word_ops != 0) {
      o.fail("BFS work done before the edge-bound refusal");
    } else {
      o.note << "refused (" << r.refusal->describe() << "), no BFS rounds; ";
    }
  }
  return o;
}

}  // namespace
}  // namespace pcube

int main() {
  using namespace pcube;
  bool all = true;
  report(1, "verdict correctness", verdict_correctness(), all);
  report(2, "labeling validity", labeling_validity(), all);
  report(3, "known answers", known_answers(), all);
  report(4, "step-count bounds", step_bounds(), all);
  report(5, "tree step trend", tree_trend(), all);
  report(6, "antimatroid sizes", antimatroid_sizes(), all);
  report(7, "path scaling", path_scaling(), all);
  report(8, "edge-bound refusal", edge_bound_refusal(), all);
  return all ? 0 : 1;
}
