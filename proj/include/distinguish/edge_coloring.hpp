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

#ifndef DISTINGUISH_EDGE_COLORING_HPP_
#define DISTINGUISH_EDGE_COLORING_HPP_

#include <span>
#include <vector>

#include "distinguish/graph.hpp"

namespace distinguish {

// Total map from the edges of a graph shape to colors 1..num_colors.
// colors()[i] is the color of edges()[i]; edges() is the sorted edge list of
// the graph the coloring was built for.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  // Throws std::invalid_argument when colors.size() != g.num_edges(), when a
  // color falls outside 1..num_colors, or num_colors < 1 with edges present.
  EdgeColoring(const Graph& g, std::vector<int> colors, int num_colors);
  // Same, with num_colors taken as the largest color used.
  EdgeColoring(const Graph& g, std::vector<int> colors);

  static EdgeColoring Uniform(const Graph& g, int color = 1);

  int num_vertices() const { return n_; }
  int num_colors() const { return num_colors_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> colors() const { return colors_; }

  // Throws std::out_of_range when {u,v} is not an edge of the shape.
  int color_of(Vertex u, Vertex v) const;

  int max_color() const;
  // True when some color in 1..num_colors is never used.
  bool has_unused_colors() const;
  int distinct_colors() const;

  // Whether this coloring is defined on exactly g's vertex and edge set.
  bool fits(const Graph& g) const;

  bool operator==(const EdgeColoring&) const = default;

 private:
  int n_ = 0;
  int num_colors_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> colors_;
};

}  // namespace distinguish

#endif  // DISTINGUISH_EDGE_COLORING_HPP_
