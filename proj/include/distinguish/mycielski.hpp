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

#ifndef DISTINGUISH_MYCIELSKI_HPP_
#define DISTINGUISH_MYCIELSKI_HPP_

#include <cstdint>
#include <vector>

#include "distinguish/graph.hpp"

namespace distinguish {

// Provenance of a vertex in a (generalized) Mycielskian. Level 0 holds the
// original vertices, levels 1..t the shadows; the root is the apex.
struct VertexRole {
  bool is_root = false;
  int level = 0;
  Vertex original = 0;

  static VertexRole Root() { return {true, 0, 0}; }
  static VertexRole Level(int j, Vertex i) { return {false, j, i}; }

  bool operator==(const VertexRole&) const = default;
};

// Canonical numbering: Level(j, i) -> j * base_n + i, root -> base_n * (t + 1).
struct LabeledGraph {
  Graph graph;
  std::vector<VertexRole> roles;
  int t = 1;
  int base_n = 0;

  Vertex root() const { return base_n * (t + 1); }
  Vertex at(int level, Vertex original) const { return level * base_n + original; }

  bool operator==(const LabeledGraph&) const = default;
};

// The classical construction mu(G) written out from its own edge rules.
LabeledGraph mycielskian(const Graph& g);

// mu_t(G) for t >= 1; t == 0 throws std::invalid_argument.
LabeledGraph generalized_mycielskian(const Graph& g, int t);

inline constexpr std::int64_t kDefaultVertexCap = 10'000;

// p-fold application of mu_t. Roles describe only the outermost application:
// the level-0 ids are the vertices of mu_t^{p-1}(G). Throws
// std::length_error when an intermediate or final vertex count exceeds cap.
LabeledGraph iterated(const Graph& g, int t, int p,
                      std::int64_t vertex_cap = kDefaultVertexCap);

// Closed-form sizes of mu_t(G).
constexpr std::int64_t mycielskian_vertices(std::int64_t n, int t) {
  return n * (t + 1) + 1;
}
constexpr std::int64_t mycielskian_edges(std::int64_t n, std::int64_t e, int t) {
  return (2 * static_cast<std::int64_t>(t) + 1) * e + n;
}

}  // namespace distinguish

#endif  // DISTINGUISH_MYCIELSKI_HPP_
