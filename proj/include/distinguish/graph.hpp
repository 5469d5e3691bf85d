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

#ifndef DISTINGUISH_GRAPH_HPP_
#define DISTINGUISH_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace distinguish {

using Vertex = int;

// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// Thrown by the text readers; carries the 1-based line number of the fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
//
// Edges are kept sorted lexicographically; the position of an edge in
// edges() is its stable index, which EdgeColoring and the search code use
// to address per-edge data. Adjacency is stored CSR style with each
// neighbor list sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Duplicates collapse. Self-loops and out-of-range ids throw
  // std::invalid_argument.
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;

  bool has_edge(Vertex u, Vertex v) const;
  // Index into edges() of {u,v}, or nullopt when absent.
  std::optional<int> edge_index(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adjacency_;
  // Edge index aligned with adjacency_.
  std::vector<int> adjacency_edge_;
};

// Equal-open-neighborhood classes. Each class is sorted; classes are ordered
// by their smallest member.
struct TwinPartition {
  std::vector<std::vector<Vertex>> classes;
  // class_of[v] indexes classes.
  std::vector<int> class_of;
};

int degree(const Graph& g, Vertex v);

// Breadth-first shortest path length; nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

// All distances from source; entries for unreachable vertices are nullopt.
std::vector<std::optional<int>> distances_from(const Graph& g, Vertex source);

TwinPartition twin_partition(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

enum class IndexRule {
  kDefined,
  kK2Component,
  kMultipleIsolated,
};

struct IndexDefined {
  bool defined = true;
  IndexRule rule = IndexRule::kDefined;
  std::string reason;

  explicit operator bool() const { return defined; }
};

// A graph has a distinguishing index iff it has no K_2 component and at most
// one isolated vertex.
IndexDefined index_defined(const Graph& g);

struct StarShape {
  int m = 0;
  Vertex center = 0;
};

// Recognizes K_{1,m} under any numbering. K_1 reports m = 0 and K_2 reports
// m = 1 (center = the smaller endpoint).
std::optional<StarShape> as_star(const Graph& g);

}  // namespace distinguish

#endif  // DISTINGUISH_GRAPH_HPP_
