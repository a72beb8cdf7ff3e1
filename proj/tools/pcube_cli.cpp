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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

constexpr const char* kFooter =
    "Files: edge lists are 'n m' followed by m lines 'u v' (0-based, '#' comments).\n"
    "Label files start with 'dim=<d>' and hold one 0/1 string per vertex with\n"
    "coordinate 0 as the rightmost character. Class files hold one coordinate per edge.\n"
    "Exit status: 0 partial cube / valid, 1 not a partial cube / invalid, 2 input error.";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial cube recognition, labeling and verification"};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::size_t word_cap = 32;
  bool trace = false;
  std::optional<std::string> out_path;

  pcube::cli::RecognizeArgs recognize_args;
  auto* recognize = app.add_subcommand("recognize", "Decide whether a graph is a partial cube and label it");
  recognize->add_option("input", recognize_args.input, "Edge-list file")->required();
  recognize->add_option("--out", out_path, "Prefix for <prefix>.labels and <prefix>.classes (default: input path)");
  recognize->add_flag("--no-write", "Do not write label/class files");
  recognize->add_flag("--trace", trace, "Print one line per Phase-II root move");

  std::string verify_graph, verify_labels;
  auto* verify = app.add_subcommand("verify", "Check a labeling of a graph");
  verify->add_option("graph", verify_graph, "Edge-list file")->required();
  verify->add_option("labels", verify_labels, "Label file")->required();

  std::string family;
  std::vector<std::string> params;
  auto* generate = app.add_subcommand(
      "generate",
      "Emit a generated graph: hypercube d | path n | cycle n | star n | bipartite a b | tree n |\n"
      "antimatroid k t | random n extra | perturb <file> delete|add  (params positional or key=value)");
  generate->add_option("family", family, "Graph family")->required();
  generate->add_option("params", params, "Family parameters");
  generate->add_option("--seed", seed, "Random seed");
  generate->add_option("--out", out_path, "Output file (default: stdout)");

  pcube::cli::BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run the experiment grids and write CSV");
  bench->add_option("--family", bench_args.family, "trees | antimatroid")->check(CLI::IsMember({"trees", "antimatroid"}));
  bench->add_option("--grid", bench_args.grid, "Cells: '50,100' for trees, '2x15,3x20' for antimatroids");
  bench->add_option("--seeds", bench_args.seeds, "Instances per cell");
  bench->add_option("--seed", seed, "First seed");
  bench->add_option("--word-cap", word_cap, "Bits per word for the Phase-I pass count");
  bench->add_option("--out", out_path, "CSV file (default: stdout)");

  pcube::cli::OracleCheckArgs oracle_args;
  auto* oracle_check = app.add_subcommand("oracle-check", "Cross-check the pipeline against the brute-force oracle");
  oracle_check->add_option("--n-max", oracle_args.n_max, "Largest random graph size");
  oracle_check->add_option("--count", oracle_args.count, "Number of random connected graphs");
  oracle_check->add_option("--seed", oracle_args.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : pcube::cli::kInputError;
  }

  if (*recognize) {
    recognize_args.out_prefix = out_path;
    recognize_args.trace = trace;
    recognize_args.write_files = recognize->count("--no-write") == 0;
    return pcube::cli::cmd_recognize(recognize_args, std::cout, std::cerr);
  }
  if (*verify) return pcube::cli::cmd_verify(verify_graph, verify_labels, std::cout, std::cerr);
  if (*generate) return pcube::cli::cmd_generate(family, params, seed, out_path, std::cout, std::cerr);
  if (*bench) {
    bench_args.first_seed = seed;
    bench_args.word_cap = word_cap;
    if (out_path) {
      std::ofstream csv(*out_path);
      if (!csv) {
        std::cerr << "error: cannot write " << *out_path << '\n';
        return pcube::cli::kInputError;
      }
      return pcube::cli::cmd_bench(bench_args, csv, std::cerr);
    }
    return pcube::cli::cmd_bench(bench_args, std::cout, std::cerr);
  }
  if (*oracle_check) {
    return pcube::cli::cmd_oracle_check(oracle_args, std::cout, std::cerr);
  }
  return pcube::cli::kInputError;
}
