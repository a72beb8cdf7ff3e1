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

#include "commands.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace pcube::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pcube_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string write_graph(const std::string& name, const Graph& g) {
    std::ostringstream text;
    io::write_edge_list(text, g);
    return write(name, text.str());
  }
  static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, RecognizeFourCube) {
  std::string path = write_graph("q4.txt", gen::hypercube(4));
  EXPECT_EQ(cmd_recognize({path, std::nullopt, false, true}, out_, err_), kPartialCube);
  EXPECT_NE(out_.str().find("dim=4\n"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("verdict: partial cube"), std::string::npos);
  std::string labels = slurp(path + ".labels");
  EXPECT_EQ(labels.substr(0, 6), "dim=4\n");
  EXPECT_EQ(std::count(labels.begin(), labels.end(), '\n'), 17);
  std::string classes = slurp(path + ".classes");
  EXPECT_EQ(std::count(classes.begin(), classes.end(), '\n'), 32);
}

TEST_F(CliTest, RecognizeCompleteBipartiteRefused) {
  std::string path = write_graph("k23.txt", gen::complete_bipartite(2, 3));
  EXPECT_EQ(cmd_recognize({path, std::nullopt, false, true}, out_, err_), kNotPartialCube);
  EXPECT_NE(out_.str().find("multi-bit edge"), std::string::npos) << out_.str();
  EXPECT_FALSE(fs::exists(path + ".labels"));
}

TEST_F(CliTest, RecognizeGarbage) {
  std::string path = write("garbage.txt", "this is not a graph\n");
  EXPECT_EQ(cmd_recognize({path, std::nullopt, false, true}, out_, err_), kInputError);
  EXPECT_NE(err_.str().find("error"), std::string::npos);
  EXPECT_EQ(cmd_recognize({(dir_ / "missing").string(), std::nullopt, false, true}, out_, err_), kInputError);
}

TEST_F(CliTest, RecognizeTraceAndPrefix) {
  std::string path = write_graph("p3.txt", gen::path(3));
  std::string prefix = (dir_ / "out").string();
  EXPECT_EQ(cmd_recognize({path, prefix, true, true}, out_, err_), kPartialCube);
  EXPECT_NE(out_.str().find("advance 0 -> 1: "), std::string::npos) << out_.str();
  EXPECT_TRUE(fs::exists(prefix + ".labels"));
  EXPECT_FALSE(fs::exists(path + ".labels"));
}

TEST_F(CliTest, VerifyCubeCoordinates) {
  std::string g = write_graph("q3.txt", gen::hypercube(3));
  std::string lab = write("q3.labels", "dim=3\n000\n001\n010\n011\n100\n101\n110\n111\n");
  EXPECT_EQ(cmd_verify(g, lab, out_, err_), kPartialCube) << err_.str() << out_.str();
}

TEST_F(CliTest, VerifyMislabeledPath) {
  std::string g = write_graph("p3.txt", gen::path(3));
  std::string lab = write("p3.labels", "dim=2\n00\n01\n10\n");
  EXPECT_EQ(cmd_verify(g, lab, out_, err_), kNotPartialCube);
}

TEST_F(CliTest, VerifyWrongLabelLength) {
  std::string g = write_graph("p3.txt", gen::path(3));
  std::string lab = write("p3.labels", "dim=2\n00\n01\n111\n");
  EXPECT_EQ(cmd_verify(g, lab, out_, err_), kInputError);
  std::string too_few = write("few.labels", "dim=2\n00\n01\n");
  EXPECT_EQ(cmd_verify(g, too_few, out_, err_), kInputError);
}

TEST_F(CliTest, VerifyOwnOutput) {
  std::string path = write_graph("anti.txt", gen::permutation_antimatroid(3, 6, 2));
  ASSERT_EQ(cmd_recognize({path, std::nullopt, false, true}, out_, err_), kPartialCube);
  EXPECT_EQ(cmd_verify(path, path + ".labels", out_, err_), kPartialCube);
}

TEST_F(CliTest, GenerateFamilies) {
  EXPECT_EQ(generate("hypercube", {"3"}, 0).n(), 8u);
  EXPECT_EQ(generate("hypercube", {"d=3"}, 0).m(), 12u);
  EXPECT_EQ(generate("bipartite", {"a=2", "b=3"}, 0).m(), 6u);
  EXPECT_EQ(generate("tree", {"n=30"}, 4).m(), 29u);
  EXPECT_EQ(generate("antimatroid", {"k=1", "t=5"}, 0).n(), 6u);
  EXPECT_EQ(generate("antimatroid", {"k=2", "t=15", "seed=1"}, 0).edge_pairs(),
            gen::permutation_antimatroid(2, 15, 1).edge_pairs());
  EXPECT_THROW(generate("cycle", {"7"}, 0), std::invalid_argument);
  EXPECT_THROW(generate("nonsense", {}, 0), std::invalid_argument);
}

TEST_F(CliTest, GenerateIsReproducible) {
  std::string a = (dir_ / "a.txt").string(), b = (dir_ / "b.txt").string();
  ASSERT_EQ(cmd_generate("antimatroid", {"k=2", "t=15", "seed=1"}, 0, a, out_, err_), 0);
  ASSERT_EQ(cmd_generate("antimatroid", {"k=2", "t=15", "seed=1"}, 0, b, out_, err_), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(cmd_generate("cycle", {"7"}, 0, std::nullopt, out_, err_), kInputError);
}

TEST_F(CliTest, GeneratePerturbReadsAFile) {
  std::string base = write_graph("q3.txt", gen::hypercube(3));
  Graph g = generate("perturb", {"graph=" + base, "op=delete"}, 5);
  EXPECT_EQ(g.m(), 11u);
}

TEST_F(CliTest, BenchEmptyGridIsHeaderOnly) {
  BenchArgs args;
  args.grid = "";
  ASSERT_EQ(cmd_bench(args, out_, err_), 0) << err_.str();
  EXPECT_EQ(out_.str(),
            "row,family,p1,p2,seed,n,m,accepted,phase1_rounds,phase1_passes,phase2_steps_per_vertex,"
            "phase2_max_vertex_steps,word_ops,scan_steps,wall_ms\n");
}

TEST_F(CliTest, BenchTreesShapedLikeReferenceTable) {
  BenchArgs args;
  args.grid = "50,100";
  args.seeds = 3;
  ASSERT_EQ(cmd_bench(args, out_, err_), 0);
  std::vector<std::string> lines = detail::split(out_.str(), '\n');
  std::erase(lines, std::string());
  ASSERT_EQ(lines.size(), 1u + 6u + 2u);
  EXPECT_EQ(lines[7].substr(0, 20), "mean,trees,50,,,50,4");
  EXPECT_NE(lines[7].find(",24.5,"), std::string::npos) << lines[7];
  EXPECT_NE(lines[8].find(",49.5,"), std::string::npos) << lines[8];
}

TEST_F(CliTest, BenchAntimatroidCell) {
  BenchArgs args;
  args.family = "antimatroid";
  args.grid = "2x6";
  args.seeds = 2;
  ASSERT_EQ(cmd_bench(args, out_, err_), 0);
  EXPECT_NE(out_.str().find("instance,antimatroid,2,6,0,"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("mean,antimatroid,2,6,,"), std::string::npos);
}

TEST_F(CliTest, BenchBadArguments) {
  BenchArgs bad_family;
  bad_family.family = "cubes";
  EXPECT_EQ(cmd_bench(bad_family, out_, err_), kInputError);
  BenchArgs bad_cell;
  bad_cell.family = "antimatroid";
  bad_cell.grid = "2-15";
  EXPECT_EQ(cmd_bench(bad_cell, out_, err_), kInputError);
  BenchArgs bad_cap;
  bad_cap.word_cap = 0;
  EXPECT_EQ(cmd_bench(bad_cap, out_, err_), kInputError);
}

TEST_F(CliTest, OracleCheckFindsNoDisagreements) {
  OracleCheckArgs args;
  args.n_max = 7;
  args.count = 300;
  EXPECT_EQ(cmd_oracle_check(args, out_, err_), 0);
  EXPECT_NE(out_.str().find(", 0 disagreements"), std::string::npos) << out_.str();
}

TEST(Corpus, IncludesTheNegativeAndTreeCases) {
  std::vector<Graph> corpus = small_family_corpus(7, 1);
  bool has_k23 = false;
  std::size_t trees = 0;
  for (const Graph& g : corpus) {
    has_k23 |= g.n() == 5 && g.m() == 6 && !oracle::is_partial_cube_bruteforce(g) && is_bipartite(g).bipartite;
    if (is_connected(g) && g.m() + 1 == g.n()) {
      ++trees;
      EXPECT_TRUE(pipeline_agrees_with_oracle(g));
      EXPECT_TRUE(recognize(g).partial_cube);
    }
  }
  EXPECT_TRUE(has_k23);
  EXPECT_GT(trees, 10u);
}

// The installed binary: exit codes and subcommand wiring.
int run(const std::string& args, std::string* output = nullptr) {
  std::string cmd = std::string(PCUBE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  std::string text;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, got);
  int status = pclose(pipe);
  if (output) *output = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CliTest, BinaryEndToEnd) {
  std::string q4 = (dir_ / "q4.txt").string();
  std::string text;
  ASSERT_EQ(run("generate hypercube 4 --out " + q4), 0);
  EXPECT_EQ(run("recognize " + q4, &text), 0);
  EXPECT_NE(text.find("dim=4"), std::string::npos) << text;
  EXPECT_EQ(run("verify " + q4 + " " + q4 + ".labels"), 0);

  std::string k23 = (dir_ / "k23.txt").string();
  ASSERT_EQ(run("generate bipartite 2 3 --out " + k23), 0);
  EXPECT_EQ(run("recognize --no-write " + k23), 1);

  EXPECT_EQ(run("recognize " + write("junk.txt", "1 2 3\nzzz\n")), 2);
  EXPECT_EQ(run("generate cycle 7"), 2);
  EXPECT_EQ(run("no-such-command"), 2);
  EXPECT_EQ(run("oracle-check --n-max 5 --count 50", &text), 0);
  EXPECT_NE(text.find("0 disagreements"), std::string::npos);
  EXPECT_EQ(run("bench --grid 20 --seeds 2", &text), 0);
  EXPECT_NE(text.find("mean,trees,20"), std::string::npos);
}

}  // namespace
}  // namespace pcube::cli
