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

#ifndef DISTINGUISH_FAMILIES_HPP_
#define DISTINGUISH_FAMILIES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "distinguish/graph.hpp"

namespace distinguish {

// K_{1,m}: center 0, leaves 1..m.
Graph star_graph(int m);
// P_n: 0 - 1 - ... - (n-1).
Graph path_graph(int n);
// C_n for n >= 3.
Graph cycle_graph(int n);
Graph complete_graph(int n);
// An asymmetric graph on 6 vertices and 6 edges: a triangle 0-1-2 with
// pendant paths 0-3-5 and 1-4.
Graph asymmetric6();

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Declarative corpus, one entry per line:
//   star <m>      path <n>      cycle <n>      complete <n>
//   asym6         file <path> [name]
// Numeric arguments also accept an inclusive range "a..b". '#' starts a
// comment line. Relative file paths resolve against base_dir. Throws
// ParseError.
std::vector<NamedGraph> parse_corpus(std::string_view text,
                                     const std::string& base_dir = ".");

}  // namespace distinguish

#endif  // DISTINGUISH_FAMILIES_HPP_
