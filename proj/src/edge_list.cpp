// Copyright 2026 The distinguish Authors
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

#include "distinguish/edge_list.hpp"

#include <sstream>
#include <vector>

namespace distinguish {
namespace {

bool skippable(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

// Parses exactly two non-negative integers from the line.
bool two_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream in(line);
  std::string extra;
  if (!(in >> a >> b)) return false;
  if (in >> extra) return false;
  return true;
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    long long a = 0;
    long long b = 0;
    if (!two_ints(line, a, b)) {
      throw ParseError(line_no, "expected two integers, got \"" + line + "\"");
    }
    if (!have_header) {
      if (a < 0 || b < 0) throw ParseError(line_no, "negative count in header");
      if (a > 100'000'000) throw ParseError(line_no, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(line_no, "more edge lines than the declared " +
                                    std::to_string(m));
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError(line_no, "vertex id out of range 0.." + std::to_string(n - 1));
    }
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw ParseError(line_no + 1, "missing \"n m\" header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no + 1, "declared " + std::to_string(m) +
                                      " edges but found " +
                                      std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace distinguish
