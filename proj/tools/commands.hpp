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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcube.hpp"

// Subcommand bodies, separate from argument parsing so tests can drive them
// with in-memory streams. Every command returns the process exit status.
namespace pcube::cli {

enum ExitCode : int { kPartialCube = 0, kNotPartialCube = 1, kInputError = 2 };

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + ": '" + text + "'");
  }
  if (used != text.size() || text.front() == '-') throw std::invalid_argument("bad " + what + ": '" + text + "'");
  return v;
}

// Positional or key=value generator parameters.
class Params {
 public:
  explicit Params(const std::vector<std::string>& raw) {
    for (const std::string& p : raw) {
      auto eq = p.find('=');
      if (eq == std::string::npos) {
        positional_.push_back(p);
      } else {
        named_.emplace_back(p.substr(0, eq), p.substr(eq + 1));
      }
    }
  }

  std::string text(const std::string& name, std::size_t position) const {
    for (const auto& [k, v] : named_) {
      if (k == name) return v;
    }
    if (position < positional_.size()) return positional_[position];
    throw std::invalid_argument("missing parameter '" + name + "'");
  }
  std::uint64_t number(const std::string& name, std::size_t position) const {
    return parse_uint(text(name, position), name);
  }
  std::optional<std::uint64_t> optional_number(const std::string& name) const {
    for (const auto& [k, v] : named_) {
      if (k == name) return parse_uint(v, name);
    }
    return std::nullopt;
  }

 private:
  std::vector<std::string> positional_;
  std::vector<std::pair<std::string, std::string>> named_;
};

}  // namespace detail

struct RecognizeArgs {
  std::string input;
  std::optional<std::string> out_prefix;  // defaults to the input path
  bool trace = false;
  bool write_files = true;
};

inline int cmd_recognize(const RecognizeArgs& args, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = io::read_edge_list_file(args.input);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (g.n() == 0) {
    err << "error: graph has no vertices\n";
    return kInputError;
  }
  VerifyOptions options;
  if (args.trace) options.trace = &out;
  const auto start = std::chrono::steady_clock::now();
  Recognition r = recognize(g, options);
  const double ms = detail::elapsed_ms(start);

  out << "n=" << g.n() << " m=" << g.m() << '\n';
  if (!r.partial_cube) {
    out << "verdict: not a partial cube\n";
    out << "reason: " << r.refusal->describe() << '\n';
    out << "time_ms=" << std::fixed << std::setprecision(3) << ms << '\n';
    return kNotPartialCube;
  }
  out << "verdict: partial cube\n";
  out << "dim=" << r.labeling.dimension << '\n';
  out << "phase1_rounds=" << r.phase1.round_count() << '\n';
  out << "phase2_steps_per_vertex=" << std::setprecision(6) << r.phase2.steps_per_vertex() << '\n';
  out << "time_ms=" << std::fixed << std::setprecision(3) << ms << '\n';
  if (args.write_files) {
    const std::string prefix = args.out_prefix.value_or(args.input);
    std::ofstream labels(prefix + ".labels");
    std::ofstream classes(prefix + ".classes");
    if (!labels || !classes) {
      err << "error: cannot write " << prefix << ".labels / .classes\n";
      return kInputError;
    }
    io::write_labels(labels, r.labeling);
    io::write_classes(classes, r.partition);
    out << "labels: " << prefix << ".labels\nclasses: " << prefix << ".classes\n";
  }
  return kPartialCube;
}

// Classes are derived from the labels: an edge belongs to the single
// coordinate in which its endpoint labels differ.
inline int cmd_verify(const std::string& graph_path, const std::string& labels_path, std::ostream& out,
                      std::ostream& err) {
  Graph g;
  SemicubeLabeling lab;
  try {
    g = io::read_edge_list_file(graph_path);
    std::ifstream in(labels_path);
    if (!in) throw std::runtime_error("cannot open " + labels_path);
    lab = io::read_labels(in);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (g.n() == 0 || lab.labels.size() != g.n()) {
    err << "error: label file has " << lab.labels.size() << " labels for " << g.n() << " vertices\n";
    return kInputError;
  }
  std::vector<std::uint32_t> coordinate(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& edge = g.edge(e);
    BitClass c = (lab.labels[edge.u] ^ lab.labels[edge.v]).classify();
    if (c.kind != BitClass::Kind::kExactlyOne) {
      out << "verdict: invalid labeling\nreason: edge " << e << " (" << edge.u << "," << edge.v
          << ") labels differ in " << (lab.labels[edge.u] ^ lab.labels[edge.v]).count() << " bits\n";
      return kNotPartialCube;
    }
    coordinate[e] = static_cast<std::uint32_t>(c.index);
  }
  EdgeClassPartition part = EdgeClassPartition::from_coordinates(coordinate, lab.dimension);
  Result<Phase2Stats> v = verify(g, lab, part);
  if (!v) {
    out << "verdict: invalid labeling\nreason: " << v.refusal().describe() << '\n';
    return kNotPartialCube;
  }
  out << "verdict: valid partial cube labeling\ndim=" << lab.dimension << '\n';
  return kPartialCube;
}

// Families: hypercube d | path n | cycle n | star n | bipartite a b |
// tree n | antimatroid k t | random n extra | perturb <graph-file> delete|add
inline Graph generate(const std::string& family, const std::vector<std::string>& raw, std::uint64_t seed) {
  detail::Params p(raw);
  if (auto s = p.optional_number("seed")) seed = *s;
  if (family == "hypercube") return gen::hypercube(static_cast<unsigned>(p.number("d", 0)));
  if (family == "path") return gen::path(p.number("n", 0));
  if (family == "cycle") return gen::even_cycle(p.number("n", 0));
  if (family == "star") return gen::star(p.number("n", 0));
  if (family == "bipartite") return gen::complete_bipartite(p.number("a", 0), p.number("b", 1));
  if (family == "tree") return gen::random_tree(p.number("n", 0), seed);
  if (family == "antimatroid") {
    std::size_t cap = p.optional_number("cap").value_or(std::size_t{1} << 20);
    return gen::permutation_antimatroid(p.number("k", 0), p.number("t", 1), seed, cap);
  }
  if (family == "random") return gen::random_connected(p.number("n", 0), p.number("extra", 1), seed);
  if (family == "perturb") {
    Graph base = io::read_edge_list_file(p.text("graph", 0));
    std::string op = p.text("op", 1);
    if (op != "delete" && op != "add") throw std::invalid_argument("perturb op must be 'delete' or 'add'");
    return gen::perturb(base, op == "delete" ? gen::PerturbOp::kDeleteEdge : gen::PerturbOp::kAddEdge, seed);
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

inline int cmd_generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed,
                        const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = generate(family, params, seed);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (out_path) {
    std::ofstream file(*out_path);
    if (!file) {
      err << "error: cannot write " << *out_path << '\n';
      return kInputError;
    }
    io::write_edge_list(file, g);
  } else {
    io::write_edge_list(out, g);
  }
  return 0;
}

struct BenchArgs {
  std::string family = "trees";       // trees | antimatroid
  std::optional<std::string> grid;    // "50,100" or "2x15,3x20"; unset = the reference grid
  std::size_t seeds = 10;
  std::uint64_t first_seed = 0;
  std::size_t word_cap = 32;
};

struct BenchRow {
  std::size_t p1 = 0, p2 = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0, m = 0;
  std::size_t rounds = 0, passes = 0;
  double steps_per_vertex = 0;
  std::uint64_t max_vertex_steps = 0;
  std::uint64_t word_ops = 0, scan_steps = 0;
  double wall_ms = 0;
  bool accepted = false;
};

inline BenchRow bench_instance(const Graph& g, std::size_t word_cap) {
  BenchRow row;
  row.n = g.n();
  row.m = g.m();
  const auto start = std::chrono::steady_clock::now();
  Recognition r = recognize(g);
  row.wall_ms = detail::elapsed_ms(start);
  row.accepted = r.partial_cube;
  row.rounds = r.phase1.round_count();
  row.passes = r.phase1.passes(word_cap);
  row.word_ops = r.phase1.word_ops;
  row.steps_per_vertex = r.phase2.steps_per_vertex();
  row.max_vertex_steps = r.phase2.max_vertex_steps();
  row.scan_steps = r.phase2.total_steps;
  return row;
}

inline int cmd_bench(const BenchArgs& args, std::ostream& csv, std::ostream& err) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  const bool trees = args.family == "trees";
  if (!trees && args.family != "antimatroid") {
    err << "error: bench family must be 'trees' or 'antimatroid'\n";
    return kInputError;
  }
  if (args.word_cap == 0) {
    err << "error: --word-cap must be positive\n";
    return kInputError;
  }
  try {
    if (!args.grid) {
      if (trees) {
        cells = {{50, 0}, {100, 0}, {200, 0}, {400, 0}, {800, 0}};
      } else {
        cells = {{2, 15}, {2, 20}, {2, 25}, {2, 30}, {2, 35}, {2, 40}, {3, 15},
                 {3, 20}, {3, 25}, {3, 30}, {4, 15}, {4, 20}, {5, 15}};
      }
    } else {
      for (const std::string& cell : detail::split(*args.grid, ',')) {
        if (trees) {
          cells.emplace_back(detail::parse_uint(cell, "tree size"), 0);
        } else {
          auto x = cell.find('x');
          if (x == std::string::npos) throw std::invalid_argument("antimatroid cell must look like KxT: " + cell);
          cells.emplace_back(detail::parse_uint(cell.substr(0, x), "k"), detail::parse_uint(cell.substr(x + 1), "t"));
        }
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  csv << "row,family,p1,p2,seed,n,m,accepted,phase1_rounds,phase1_passes,phase2_steps_per_vertex,"
         "phase2_max_vertex_steps,word_ops,scan_steps,wall_ms\n";
  auto emit = [&](const char* kind, const BenchRow& r, bool mean, std::size_t count) {
    csv << kind << ',' << args.family << ',' << r.p1 << ',' << (trees ? std::string() : std::to_string(r.p2)) << ',';
    if (!mean) csv << r.seed;
    csv << std::setprecision(10);
    auto avg = [&](double v) { return mean ? v / static_cast<double>(count) : v; };
    csv << ',' << avg(static_cast<double>(r.n)) << ',' << avg(static_cast<double>(r.m)) << ','
        << (mean ? std::string() : std::string(r.accepted ? "1" : "0")) << ',' << avg(static_cast<double>(r.rounds))
        << ',' << avg(static_cast<double>(r.passes)) << ',' << avg(r.steps_per_vertex) << ','
        << avg(static_cast<double>(r.max_vertex_steps)) << ',' << avg(static_cast<double>(r.word_ops)) << ','
        << avg(static_cast<double>(r.scan_steps)) << ',' << avg(r.wall_ms) << '\n';
  };

  std::vector<std::pair<std::pair<std::size_t, std::size_t>, BenchRow>> totals;
  for (const auto& [p1, p2] : cells) {
    BenchRow sum;
    sum.p1 = p1;
    sum.p2 = p2;
    for (std::size_t s = 0; s < args.seeds; ++s) {
      const std::uint64_t seed = args.first_seed + s;
      Graph g;
      try {
        g = trees ? gen::random_tree(p1, seed) : gen::permutation_antimatroid(p1, p2, seed);
      } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
      }
      BenchRow row = bench_instance(g, args.word_cap);
      row.p1 = p1;
      row.p2 = p2;
      row.seed = seed;
      emit("instance", row, false, 1);
      sum.n += row.n;
      sum.m += row.m;
      sum.rounds += row.rounds;
      sum.passes += row.passes;
      sum.steps_per_vertex += row.steps_per_vertex;
      sum.max_vertex_steps += row.max_vertex_steps;
      sum.word_ops += row.word_ops;
      sum.scan_steps += row.scan_steps;
      sum.wall_ms += row.wall_ms;
    }
    totals.emplace_back(std::make_pair(p1, p2), sum);
  }
  if (args.seeds > 0) {
    for (const auto& [cell, sum] : totals) emit("mean", sum, true, args.seeds);
  }
  return 0;
}

struct OracleCheckArgs {
  std::size_t n_max = 8;
  std::size_t count = 2000;
  std::uint64_t seed = 1;
};

struct OracleCheckSummary {
  std::size_t checked = 0;
  std::size_t disagreements = 0;
};

// Compares the pipeline against the brute-force oracle on one graph:
// verdicts must match, and accepted labelings must agree up to hypercube
// symmetry and reproduce every pairwise distance.
inline bool pipeline_agrees_with_oracle(const Graph& g, std::string* why = nullptr) {
  const bool expected = oracle::is_partial_cube_bruteforce(g);
  Recognition r = recognize(g);
  if (r.partial_cube != expected) {
    if (why) *why = std::string("pipeline says ") + (r.partial_cube ? "yes" : "no") + ", oracle says " +
                    (expected ? "yes" : "no") + (r.refusal ? " (" + r.refusal->describe() + ")" : "");
    return false;
  }
  if (!expected) return true;
  if (!oracle::equivalent_up_to_cube_symmetry(r.labeling, oracle::label_bruteforce(g))) {
    if (why) *why = "labelings differ beyond hypercube symmetry";
    return false;
  }
  if (!oracle::hamming_check(g, r.labeling)) {
    if (why) *why = "pipeline labeling fails the Hamming check";
    return false;
  }
  return true;
}

inline std::vector<Graph> small_family_corpus(std::size_t n_max, std::uint64_t seed) {
  std::vector<Graph> corpus;
  for (unsigned d = 0; (std::size_t{1} << d) <= std::max<std::size_t>(n_max, 1); ++d) corpus.push_back(gen::hypercube(d));
  for (std::size_t n = 1; n <= n_max; ++n) {
    corpus.push_back(gen::path(n));
    corpus.push_back(gen::star(n));
    if (n >= 4 && n % 2 == 0) corpus.push_back(gen::even_cycle(n));
    corpus.push_back(gen::random_tree(n, seed + n));
  }
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = a; a + b <= std::max<std::size_t>(n_max, 2); ++b) corpus.push_back(gen::complete_bipartite(a, b));
  }
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t t = 1; t <= 4; ++t) {
      Graph a = gen::permutation_antimatroid(k, t, seed + 10 * k + t);
      if (a.n() <= std::max<std::size_t>(n_max, 2) * 2) corpus.push_back(std::move(a));
    }
  }
  std::size_t base = corpus.size();
  for (std::size_t i = 0; i < base; ++i) {
    const std::size_t n = corpus[i].n(), m = corpus[i].m();
    if (m > 0) {
      Graph fewer = gen::perturb(corpus[i], gen::PerturbOp::kDeleteEdge, seed + i);
      corpus.push_back(std::move(fewer));
    }
    if (m < n * (n - 1) / 2) {
      Graph more = gen::perturb(corpus[i], gen::PerturbOp::kAddEdge, seed + i);
      corpus.push_back(std::move(more));
    }
  }
  return corpus;
}

inline int cmd_oracle_check(const OracleCheckArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n_max == 0) {
    err << "error: --n-max must be positive\n";
    return kInputError;
  }
  OracleCheckSummary summary;
  auto check = [&](const Graph& g) {
    ++summary.checked;
    std::string why;
    if (!pipeline_agrees_with_oracle(g, &why)) {
      ++summary.disagreements;
      out << "disagreement: " << why << '\n';
      io::write_edge_list(out, g);
      return false;
    }
    return true;
  };

  for (const Graph& g : small_family_corpus(args.n_max, args.seed)) {
    if (!check(g)) break;
  }
  gen::Rng rng(args.seed);
  for (std::size_t i = 0; i < args.count && summary.disagreements == 0; ++i) {
    std::size_t n = 1 + static_cast<std::size_t>(rng.below(args.n_max));
    std::size_t extra = static_cast<std::size_t>(rng.below(n + 1));
    check(gen::random_connected(n, extra, rng.next()));
  }
  out << "checked " << summary.checked << " graphs, " << summary.disagreements << " disagreements\n";
  return summary.disagreements == 0 ? 0 : 1;
}

}  // namespace pcube::cli
