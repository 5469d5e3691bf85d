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

// Brute-force reference implementations. Deliberately naive: they share no
// code with the library beyond reading a Graph's edge list.

#ifndef DISTINGUISH_TESTS_ORACLES_HPP_
#define DISTINGUISH_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "distinguish/graph.hpp"

namespace oracle {

using distinguish::Edge;
using distinguish::Graph;

inline std::vector<std::vector<int>> adjacency_matrix(const Graph& g, int fill = 1) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = fill;
  return adj;
}

// Matrix with colors[idx] on the edge g.edges()[idx], zero off edges.
inline std::vector<std::vector<int>> colored_matrix(const Graph& g,
                                                   const std::vector<int>& colors) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < colors.size(); ++i) {
    const Edge& e = g.edges()[i];
    adj[e.u][e.v] = adj[e.v][e.u] = colors[i];
  }
  return adj;
}

inline bool preserves(const std::vector<std::vector<int>>& adj, const std::vector<int>& p) {
  const int n = static_cast<int>(adj.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (adj[a][b] != adj[p[a]][p[b]]) return false;
    }
  }
  return true;
}

// Every permutation of the vertex set filtered by the matrix. n! work.
inline std::vector<std::vector<int>> automorphisms(const std::vector<std::vector<int>>& adj) {
  std::vector<int> p(adj.size());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (preserves(adj, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
  return automorphisms(adjacency_matrix(g));
}

inline bool is_identity(const std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

// Checks the coloring against a precomputed automorphism group.
inline bool distinguishing(const Graph& g, const std::vector<int>& colors,
                           const std::vector<std::vector<int>>& group) {
  const auto adj = colored_matrix(g, colors);
  for (const auto& p : group) {
    if (!is_identity(p) && preserves(adj, p)) return false;
  }
  return true;
}

// All k^|E| colorings, no pruning.
inline bool exists_distinguishing(const Graph& g, int k) {
  const auto group = automorphisms(g);
  const int m = g.num_edges();
  std::vector<int> colors(m, 1);
  for (;;) {
    if (distinguishing(g, colors, group)) return true;
    int i = 0;
    while (i < m && colors[i] == k) colors[i++] = 1;
    if (i == m) return false;
    ++colors[i];
  }
}

inline int index(const Graph& g, int max_k) {
  for (int k = 1; k <= max_k; ++k) {
    if (oracle::exists_distinguishing(g, k)) return k;
  }
  return -1;
}

// Isomorphism by trying every bijection.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const auto adj_a = adjacency_matrix(a);
  const auto adj_b = adjacency_matrix(b);
  std::vector<int> p(a.num_vertices());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : a.edges()) {
      if (!adj_b[p[e.u]][p[e.v]]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Mycielskian from the textbook description with its own numbering:
// originals 0..n-1, shadows n..2n-1, root 2n. Shadow u_i joins N(v_i) and w.
inline Graph textbook_mycielskian(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.emplace_back(e.u, e.v);
    edges.emplace_back(n + e.u, e.v);
    edges.emplace_back(n + e.v, e.u);
  }
  for (int i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
  return Graph(2 * n + 1, edges);
}

// Uniform random graph on n vertices with each edge present independently.
inline Graph random_graph(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return Graph(n, edges);
}

// Random graph with exactly m edges (m at most n(n-1)/2).
inline Graph random_graph_edges(std::mt19937& rng, int n, int m) {
  std::vector<Edge> all;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<size_t>(m, all.size()));
  return Graph(n, all);
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph relabel(const Graph& g, const std::vector<int>& p) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(p[e.u], p[e.v]);
  return Graph(g.num_vertices(), edges);
}

}  // namespace oracle

#endif  // DISTINGUISH_TESTS_ORACLES_HPP_
