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

#include "distinguish/mycielski.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace distinguish {
namespace {

std::vector<VertexRole> layered_roles(int base_n, int t) {
  std::vector<VertexRole> roles;
  roles.reserve(static_cast<size_t>(base_n) * (t + 1) + 1);
  for (int j = 0; j <= t; ++j) {
    for (Vertex i = 0; i < base_n; ++i) roles.push_back(VertexRole::Level(j, i));
  }
  roles.push_back(VertexRole::Root());
  return roles;
}

}  // namespace

LabeledGraph mycielskian(const Graph& g) {
  const int n = g.num_vertices();
  // v_i = i, u_i = n + i, w = 2n.
  const Vertex w = 2 * n;
  std::vector<Edge> edges;
  edges.reserve(3 * g.num_edges() + n);
  for (const Edge& e : g.edges()) {
    edges.emplace_back(e.u, e.v);
    edges.emplace_back(e.u, n + e.v);
    edges.emplace_back(n + e.u, e.v);
  }
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(n + i, w);
  return LabeledGraph{Graph(2 * n + 1, std::move(edges)), layered_roles(n, 1), 1, n};
}

LabeledGraph generalized_mycielskian(const Graph& g, int t) {
  if (t < 1) {
    throw std::invalid_argument("generalized Mycielskian needs t >= 1, got " +
                                std::to_string(t));
  }
  const int n = g.num_vertices();
  const std::int64_t total = mycielskian_vertices(n, t);
  if (total > std::numeric_limits<int>::max()) {
    throw std::length_error("generalized Mycielskian too large");
  }
  auto at = [n](int j, Vertex i) { return j * n + i; };
  const Vertex w = n * (t + 1);
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(mycielskian_edges(n, g.num_edges(), t)));
  for (const Edge& e : g.edges()) {
    edges.emplace_back(at(0, e.u), at(0, e.v));
    for (int j = 0; j < t; ++j) {
      edges.emplace_back(at(j, e.u), at(j + 1, e.v));
      edges.emplace_back(at(j, e.v), at(j + 1, e.u));
    }
  }
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(at(t, i), w);
  return LabeledGraph{Graph(static_cast<int>(total), std::move(edges)),
                      layered_roles(n, t), t, n};
}

LabeledGraph iterated(const Graph& g, int t, int p, std::int64_t vertex_cap) {
  if (t < 1) throw std::invalid_argument("iterated Mycielskian needs t >= 1");
  if (p < 1) throw std::invalid_argument("iterated Mycielskian needs p >= 1");
  std::int64_t n = g.num_vertices();
  for (int step = 0; step < p; ++step) {
    n = mycielskian_vertices(n, t);
    if (n > vertex_cap) {
      throw std::length_error("mu_" + std::to_string(t) + "^" + std::to_string(p) +
                              " would exceed the vertex cap of " +
                              std::to_string(vertex_cap));
    }
  }
  LabeledGraph current = generalized_mycielskian(g, t);
  for (int step = 1; step < p; ++step) {
    current = generalized_mycielskian(current.graph, t);
  }
  return current;
}

}  // namespace distinguish
