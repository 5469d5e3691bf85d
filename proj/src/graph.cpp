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

#include "distinguish/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace distinguish {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) +
                                  "} has a vertex id outside 0.." +
                                  std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<int> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n]);
  adjacency_edge_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so every neighbor list comes out sorted as well.
  for (int idx = 0; idx < num_edges(); ++idx) {
    const Edge& e = edges_[idx];
    adjacency_[fill[e.u]] = e.v;
    adjacency_edge_[fill[e.u]++] = idx;
  }
  for (int idx = 0; idx < num_edges(); ++idx) {
    const Edge& e = edges_[idx];
    adjacency_[fill[e.v]] = e.u;
    adjacency_edge_[fill[e.v]++] = idx;
  }
  for (int v = 0; v < n; ++v) {
    // Lower neighbors were appended in the second pass; rotate them first.
    auto first = adjacency_.begin() + offsets_[v];
    auto last = adjacency_.begin() + offsets_[v + 1];
    auto mid = std::is_sorted_until(first, last);
    if (mid != last) {
      const auto shift = mid - first;
      std::rotate(first, mid, last);
      auto efirst = adjacency_edge_.begin() + offsets_[v];
      std::rotate(efirst, efirst + shift, adjacency_edge_.begin() + offsets_[v + 1]);
    }
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in 0.." +
                            std::to_string(n_ - 1));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v],
          static_cast<size_t>(offsets_[v + 1] - offsets_[v])};
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  return edge_index(u, v).has_value();
}

std::optional<int> Graph::edge_index(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  auto first = adjacency_.begin() + offsets_[u];
  auto last = adjacency_.begin() + offsets_[u + 1];
  auto it = std::lower_bound(first, last, v);
  if (it == last || *it != v) return std::nullopt;
  return adjacency_edge_[it - adjacency_.begin()];
}

int degree(const Graph& g, Vertex v) {
  return static_cast<int>(g.neighbors(v).size());
}

std::vector<std::optional<int>> distances_from(const Graph& g, Vertex source) {
  std::vector<std::optional<int>> dist(g.num_vertices());
  g.neighbors(source);  // range check
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors(x)) {
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  g.neighbors(v);
  return distances_from(g, u)[v];
}

TwinPartition twin_partition(const Graph& g) {
  TwinPartition out;
  out.class_of.assign(g.num_vertices(), -1);
  std::map<std::vector<Vertex>, int> by_neighborhood;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nbrs = g.neighbors(v);
    std::vector<Vertex> key(nbrs.begin(), nbrs.end());
    auto [it, inserted] =
        by_neighborhood.try_emplace(std::move(key), static_cast<int>(out.classes.size()));
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(v);
    out.class_of[v] = it->second;
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(g.num_vertices(), false);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (size_t head = 0; head < comp.size(); ++head) {
      for (Vertex y : g.neighbors(comp[head])) {
        if (!seen[y]) {
          seen[y] = true;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

IndexDefined index_defined(const Graph& g) {
  int isolated = 0;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 2) {
      return {false, IndexRule::kK2Component,
              "K_2 component {" + std::to_string(comp[0]) + "," +
                  std::to_string(comp[1]) + "}"};
    }
    if (comp.size() == 1) ++isolated;
  }
  if (isolated > 1) {
    return {false, IndexRule::kMultipleIsolated,
            std::to_string(isolated) + " isolated vertices"};
  }
  return {};
}

std::optional<StarShape> as_star(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0 || g.num_edges() != n - 1) return std::nullopt;
  if (n == 1) return StarShape{0, 0};
  if (n == 2) return StarShape{1, 0};
  Vertex center = -1;
  for (Vertex v = 0; v < n; ++v) {
    const int d = degree(g, v);
    if (d == n - 1) {
      center = v;
    } else if (d != 1) {
      return std::nullopt;
    }
  }
  if (center < 0) return std::nullopt;
  return StarShape{n - 1, center};
}

}  // namespace distinguish
