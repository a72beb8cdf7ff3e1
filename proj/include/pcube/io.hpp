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

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcube/bitvec.hpp"
#include "pcube/graph.hpp"
#include "pcube/labeler.hpp"

// Text formats:
//   edge list  "n m" then m lines "u v" (0-based); lines starting with '#'
//              and blank lines are ignored.
//   labels     "dim=<d>" then one 0/1 string per vertex, coordinate 0
//              rightmost.
//   classes    one coordinate index per edge, in edge id order.
namespace pcube::io {

class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || (end != line.data() + line.size() && *end != ' ' && *end != '\t')) {
      throw FormatError(line_no, "expected a non-negative integer in '" + std::string(line) + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(end - line.data());
  }
  return out;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::uint64_t> nums = detail::parse_numbers(line, line_no);
    if (nums.size() != 2) throw FormatError(line_no, "expected two integers");
    if (!have_header) {
      n = nums[0];
      m = nums[1];
      if (n >= kNone || m >= kNone) throw FormatError(line_no, "graph too large");
      have_header = true;
      pairs.reserve(m);
      continue;
    }
    if (pairs.size() == m) throw FormatError(line_no, "more edge lines than the declared " + std::to_string(m));
    if (nums[0] >= n || nums[1] >= n) throw FormatError(line_no, "vertex id out of range");
    if (nums[0] == nums[1]) throw FormatError(line_no, "self-loop at vertex " + std::to_string(nums[0]));
    pairs.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (!have_header) throw FormatError(line_no, "missing 'n m' header");
  if (pairs.size() != m) {
    throw FormatError(line_no, "declared " + std::to_string(m) + " edges, found " + std::to_string(pairs.size()));
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline SemicubeLabeling read_labels(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  SemicubeLabeling lab;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (!have_header) {
      if (line.empty() || line.front() == '#') continue;
      if (line.substr(0, 4) != "dim=") throw FormatError(line_no, "expected 'dim=<dimension>' header");
      std::vector<std::uint64_t> nums = detail::parse_numbers(line.substr(4), line_no);
      if (nums.size() != 1) throw FormatError(line_no, "malformed dimension");
      lab.dimension = static_cast<std::size_t>(nums[0]);
      have_header = true;
      continue;
    }
    if (line.size() != lab.dimension) {
      throw FormatError(line_no, "label length " + std::to_string(line.size()) + " differs from dim=" +
                                     std::to_string(lab.dimension));
    }
    try {
      lab.labels.push_back(BitVector::from_string(line));
    } catch (const std::invalid_argument& e) {
      throw FormatError(line_no, e.what());
    }
  }
  if (!have_header) throw FormatError(line_no, "missing 'dim=' header");
  return lab;
}

inline void write_labels(std::ostream& out, const SemicubeLabeling& lab) {
  out << "dim=" << lab.dimension << '\n';
  for (const BitVector& b : lab.labels) out << b.to_string() << '\n';
}

inline void write_classes(std::ostream& out, const EdgeClassPartition& part) {
  for (std::uint32_t c : part.coordinates()) out << c << '\n';
}

}  // namespace pcube::io
