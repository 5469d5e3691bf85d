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
#include <optional>
#include <random>

#include "distinguish/edge_list.hpp"
#include "distinguish/families.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace distinguish {
namespace {

TEST(GraphTest, EdgesAreNormalizedSortedAndDeduplicated) {
  Graph g(4, {{2, 1}, {0, 3}, {1, 2}, {3, 0}});
  ASSERT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.edges()[0], Edge(0, 3));
  EXPECT_EQ(g.edges()[1], Edge(1, 2));
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_EQ(g.edge_index(2, 1), 1);
  EXPECT_EQ(g.edge_index(0, 2), std::nullopt);
}

TEST(GraphTest, RejectsSelfLoopsAndBadIds) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{-1, 2}}), std::invalid_argument);
  Graph g(2);
  EXPECT_THROW(g.neighbors(2), std::out_of_range);
}

TEST(GraphTest, NeighborsSortedAndDegree) {
  Graph g(5, {{0, 4}, {0, 1}, {3, 0}});
  auto nb = g.neighbors(0);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{1, 3, 4}));
  EXPECT_EQ(degree(g, 0), 3);
  EXPECT_EQ(degree(g, 2), 0);
}

TEST(GraphTest, Distances) {
  const Graph p = path_graph(5);
  EXPECT_EQ(distance(p, 0, 4), 4);
  EXPECT_EQ(distance(p, 2, 2), 0);
  Graph split(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(distance(split, 0, 3), std::nullopt);
  auto d = distances_from(cycle_graph(6), 0);
  EXPECT_EQ(d[3], 3);
  EXPECT_EQ(d[5], 1);
}

TEST(GraphTest, TwinPartitionOfStar) {
  const TwinPartition tp = twin_partition(star_graph(3));
  EXPECT_EQ(tp.class_of[1], tp.class_of[2]);
  EXPECT_EQ(tp.class_of[2], tp.class_of[3]);
  EXPECT_NE(tp.class_of[0], tp.class_of[1]);
  EXPECT_EQ(tp.classes.size(), 2u);
}

TEST(GraphTest, TwinPartitionOfFourCycle) {
  const TwinPartition tp = twin_partition(cycle_graph(4));
  EXPECT_EQ(tp.class_of[0], tp.class_of[2]);
  EXPECT_EQ(tp.class_of[1], tp.class_of[3]);
  EXPECT_NE(tp.class_of[0], tp.class_of[1]);
}

TEST(GraphTest, AdjacentVerticesAreNotTwins) {
  // Open neighborhoods of adjacent vertices each contain the other.
  const TwinPartition tp = twin_partition(complete_graph(3));
  EXPECT_EQ(tp.classes.size(), 3u);
}

TEST(GraphTest, IndexDefinedRules) {
  EXPECT_TRUE(index_defined(path_graph(3)));
  auto k2 = index_defined(Graph(5, {{0, 1}, {2, 3}, {3, 4}}));
  EXPECT_FALSE(k2);
  EXPECT_EQ(k2.rule, IndexRule::kK2Component);
  EXPECT_NE(k2.reason.find("K_2 component"), std::string::npos);
  auto isolated = index_defined(Graph(5, {{0, 1}, {1, 2}}));
  EXPECT_FALSE(isolated);
  EXPECT_EQ(isolated.rule, IndexRule::kMultipleIsolated);
  // One isolated vertex is allowed.
  EXPECT_TRUE(index_defined(Graph(4, {{0, 1}, {1, 2}})));
}

TEST(GraphTest, StarRecognition) {
  auto s = as_star(Graph(5, {{3, 0}, {3, 1}, {3, 2}, {3, 4}}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->m, 4);
  EXPECT_EQ(s->center, 3);
  EXPECT_FALSE(as_star(path_graph(4)));
  EXPECT_FALSE(as_star(Graph(4, {{0, 1}, {0, 2}})));  // isolated vertex
  auto k1 = as_star(Graph(1));
  ASSERT_TRUE(k1);
  EXPECT_EQ(k1->m, 0);
  auto k2 = as_star(path_graph(2));
  ASSERT_TRUE(k2);
  EXPECT_EQ(k2->m, 1);
  auto p3 = as_star(path_graph(3));
  ASSERT_TRUE(p3);
  EXPECT_EQ(p3->center, 1);
}

TEST(GraphTest, Components) {
  auto comps = connected_components(Graph(6, {{0, 1}, {2, 3}, {3, 4}}));
  EXPECT_EQ(comps.size(), 3u);
}

TEST(EdgeListTest, ParsesWithCommentsAndBlankLines) {
  const Graph g = from_edge_list("# a path\n4 3\n\n0 1\n1 2  \n# tail\n2 3\n");
  EXPECT_EQ(g, path_graph(4));
}

TEST(EdgeListTest, RoundTrip) {
  const Graph g = cycle_graph(7);
  EXPECT_EQ(from_edge_list(to_edge_list(g)), g);
}

int parse_error_line(std::string_view text) {
  try {
    from_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("3 2\n0 1\nx 2\n"), 3);
  EXPECT_EQ(parse_error_line("3 2\n0 1\n0 3\n"), 3);
  EXPECT_EQ(parse_error_line("3 2\n1 1\n0 2\n"), 2);
  EXPECT_EQ(parse_error_line("3 1\n0 1\n1 2\n"), 3);
  EXPECT_EQ(parse_error_line("# header\nthree 1\n"), 2);
  EXPECT_EQ(parse_error_line("3 1 7\n0 1\n"), 1);
  // Missing edges are reported at the end of the input.
  EXPECT_GT(parse_error_line("3 2\n0 1\n"), 0);
  EXPECT_GT(parse_error_line(""), -1);
}

// Random graphs: parse/print round trip, and twins really are swappable.
TEST(GraphPropertyTest, RandomGraphs) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 9;
    const Graph g = oracle::random_graph(rng, n, 0.4);
    EXPECT_EQ(from_edge_list(to_edge_list(g)), g);

    const auto adj = oracle::adjacency_matrix(g);
    const TwinPartition tp = twin_partition(g);
    for (const auto& cls : tp.classes) {
      for (size_t a = 1; a < cls.size(); ++a) {
        std::vector<int> swap(n);
        for (int v = 0; v < n; ++v) swap[v] = v;
        std::swap(swap[cls[0]], swap[cls[a]]);
        EXPECT_TRUE(oracle::preserves(adj, swap));
      }
    }
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (tp.class_of[a] == tp.class_of[b]) continue;
        auto na = g.neighbors(a);
        auto nb = g.neighbors(b);
        EXPECT_FALSE(std::equal(na.begin(), na.end(), nb.begin(), nb.end()));
      }
    }
    int total = 0;
    for (const auto& comp : connected_components(g)) total += static_cast<int>(comp.size());
    EXPECT_EQ(total, n);
  }
}

TEST(GraphPropertyTest, DegreeSumAndMetric) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 10;
    const Graph g = oracle::random_graph(rng, n, 0.3);
    int sum = 0;
    for (Vertex v = 0; v < n; ++v) sum += degree(g, v);
    EXPECT_EQ(sum, 2 * g.num_edges());

    std::vector<std::vector<std::optional<int>>> d(n);
    for (Vertex v = 0; v < n; ++v) d[v] = distances_from(g, v);
    for (Vertex a = 0; a < n; ++a) {
      EXPECT_EQ(d[a][a], 0);
      for (Vertex b = 0; b < n; ++b) {
        EXPECT_EQ(d[a][b], d[b][a]);
        EXPECT_EQ(distance(g, a, b), d[a][b]);
        if (a != b) { EXPECT_EQ(d[a][b] == 1, g.has_edge(a, b)); }
        for (Vertex c = 0; c < n; ++c) {
          if (d[a][b] && d[b][c]) {
            ASSERT_TRUE(d[a][c].has_value());
            EXPECT_LE(*d[a][c], *d[a][b] + *d[b][c]);
          }
        }
      }
    }
  }
}

// Twin classes partition the vertex set and agree with pairwise comparison.
TEST(GraphPropertyTest, TwinClassesAreAPartition) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 9;
    const Graph g = oracle::random_graph(rng, n, 0.35);
    const TwinPartition tp = twin_partition(g);
    std::vector<int> seen(n, 0);
    for (size_t k = 0; k < tp.classes.size(); ++k) {
      ASSERT_FALSE(tp.classes[k].empty());
      for (Vertex v : tp.classes[k]) {
        ++seen[v];
        EXPECT_EQ(tp.class_of[v], static_cast<int>(k));
      }
    }
    for (int count : seen) EXPECT_EQ(count, 1);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        auto na = g.neighbors(a);
        auto nb = g.neighbors(b);
        const bool same = std::equal(na.begin(), na.end(), nb.begin(), nb.end());
        EXPECT_EQ(tp.class_of[a] == tp.class_of[b], same);
      }
    }
  }
}

// as_star against a brute-force isomorphism test with K_{1,m}.
TEST(GraphPropertyTest, StarRecognitionMatchesIsomorphism) {
  std::mt19937 rng(3);
  int stars = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 7;
    const Graph g = (trial % 4 == 0 && n >= 3)
                        ? oracle::relabel(star_graph(n - 1), oracle::random_permutation(rng, n))
                        : oracle::random_graph_edges(rng, n, n - 1);
    const auto star = as_star(g);
    const bool iso = oracle::isomorphic(g, star_graph(n - 1));
    ASSERT_EQ(star.has_value(), iso) << to_edge_list(g);
    if (star) {
      ++stars;
      EXPECT_EQ(star->m, n - 1);
      EXPECT_EQ(degree(g, star->center), n - 1);
    }
  }
  EXPECT_GT(stars, 50);
}

}  // namespace
}  // namespace distinguish
