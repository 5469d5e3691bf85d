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

#ifndef DISTINGUISH_IO_HPP_
#define DISTINGUISH_IO_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "distinguish/automorphism.hpp"
#include "distinguish/edge_coloring.hpp"
#include "distinguish/graph.hpp"
#include "distinguish/mycielski.hpp"

namespace distinguish {

// Role side-car, one line per vertex in id order:
//   "<id> level <j> <i>"   or   "<id> root"
// preceded by a "# roles t=<t> base_n=<n>" comment.
std::string roles_to_text(const LabeledGraph& lg);

// Rebuilds a LabeledGraph from its edge list and side-car. Throws ParseError
// on malformed lines and std::invalid_argument when the roles do not match
// the canonical numbering.
LabeledGraph labeled_from_text(std::string_view edge_list, std::string_view roles);

// JSON coloring file:
//   {"n": 7, "num_colors": 2,
//    "edges": [{"u": 0, "v": 1, "color": 1}, ...]}
// Edges are written in sorted order.
std::string coloring_to_json(const EdgeColoring& c);

// Reads a coloring for g. Every edge of g must appear exactly once. Throws
// ParseError (line 0 for structural JSON problems).
EdgeColoring coloring_from_json(const Graph& g, std::string_view text);

// Colors 1..6 map to these names; larger colors cycle through the extended
// tail. Every edge also carries its numeric color as a label.
inline constexpr std::array<std::string_view, 10> kDotPalette = {
    "red", "blue", "black", "green", "orange", "purple",
    "brown", "cyan", "magenta", "gold"};

std::string_view dot_color_name(int color);

// Undirected DOT graph. When roles are supplied, vertices are labelled
// v<i>^<j> and the root w, and ranked by level.
std::string to_dot(const Graph& g, const EdgeColoring* coloring = nullptr,
                   const LabeledGraph* roles = nullptr);

// "p0 p1 ... p(n-1)"
std::string permutation_to_text(const Permutation& p);
Permutation permutation_from_text(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace distinguish

#endif  // DISTINGUISH_IO_HPP_
