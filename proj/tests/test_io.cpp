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

#include "distinguish/io.hpp"

#include "distinguish/coloring.hpp"
#include "distinguish/edge_list.hpp"
#include "distinguish/families.hpp"
#include "distinguish/mycielski.hpp"
#include "gtest/gtest.h"

namespace distinguish {
namespace {

TEST(RolesTest, RoundTrip) {
  for (int t = 1; t <= 3; ++t) {
    const LabeledGraph lg = generalized_mycielskian(cycle_graph(5), t);
    const LabeledGraph back = labeled_from_text(to_edge_list(lg.graph), roles_to_text(lg));
    EXPECT_EQ(back, lg);
  }
}

TEST(RolesTest, RejectsBadSideCars) {
  const LabeledGraph lg = mycielskian(path_graph(3));
  const std::string edges = to_edge_list(lg.graph);
  std::string roles = roles_to_text(lg);
  EXPECT_THROW(labeled_from_text(edges, "# roles t=1 base_n=3\n0 level 0 0\n"), ParseError);
  std::string twice = roles;
  twice.replace(twice.find("6 root"), 6, "6 level 1 2");
  EXPECT_ANY_THROW(labeled_from_text(edges, twice));
  std::string junk = roles + "x wat\n";
  EXPECT_THROW(labeled_from_text(edges, junk), ParseError);
}

TEST(ColoringJsonTest, RoundTrip) {
  const ColoredMycielskian cm = star_mut_coloring(4, 2);
  const std::string text = coloring_to_json(cm.coloring);
  EXPECT_EQ(coloring_from_json(cm.graph.graph, text), cm.coloring);
  EXPECT_EQ(coloring_to_json(coloring_from_json(cm.graph.graph, text)), text);
}

TEST(ColoringJsonTest, Errors) {
  const Graph p3 = path_graph(3);
  EXPECT_THROW(coloring_from_json(p3, "{"), ParseError);
  EXPECT_THROW(coloring_from_json(p3, R"({"n":4,"num_colors":1,"edges":[]})"), ParseError);
  EXPECT_THROW(
      coloring_from_json(p3, R"({"n":3,"num_colors":1,"edges":[{"u":0,"v":1,"color":1}]})"),
      ParseError);
  EXPECT_THROW(coloring_from_json(p3, R"({"n":3,"num_colors":1,"edges":[
      {"u":0,"v":1,"color":1},{"u":0,"v":2,"color":1}]})"),
               ParseError);
  EXPECT_THROW(coloring_from_json(p3, R"({"n":3,"num_colors":1,"edges":[
      {"u":0,"v":1,"color":0},{"u":1,"v":2,"color":1}]})"),
               ParseError);
  const EdgeColoring ok = coloring_from_json(p3, R"({"n":3,"num_colors":2,"edges":[
      {"u":2,"v":1,"color":2},{"u":0,"v":1,"color":1}]})");
  EXPECT_EQ(ok.color_of(1, 2), 2);
}

TEST(DotTest, PaletteIsFixed) {
  EXPECT_EQ(dot_color_name(1), "red");
  EXPECT_EQ(dot_color_name(2), "blue");
  EXPECT_EQ(dot_color_name(3), "black");
  EXPECT_EQ(dot_color_name(4), "green");
  EXPECT_EQ(dot_color_name(5), "orange");
  EXPECT_EQ(dot_color_name(6), "purple");
}

TEST(DotTest, ColoredMycielskian) {
  const ColoredMycielskian cm = star_mu_coloring(3);
  const std::string dot = to_dot(cm.graph.graph, &cm.coloring, &cm.graph);
  EXPECT_EQ(dot.rfind("graph", 0), 0u);
  EXPECT_NE(dot.find("color=\"red\""), std::string::npos);
  EXPECT_NE(dot.find("color=\"blue\""), std::string::npos);
  EXPECT_NE(dot.find("\"w\""), std::string::npos);
  EXPECT_NE(dot.find("rank=same"), std::string::npos);
  size_t edges = 0;
  for (size_t pos = dot.find("--"); pos != std::string::npos; pos = dot.find("--", pos + 2)) {
    ++edges;
  }
  EXPECT_EQ(edges, static_cast<size_t>(cm.graph.graph.num_edges()));
  EXPECT_EQ(to_dot(cm.graph.graph, &cm.coloring, &cm.graph), dot);
}

TEST(DotTest, PlainGraph) {
  const std::string dot = to_dot(path_graph(3));
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
  EXPECT_EQ(dot.find("color="), std::string::npos);
}

TEST(PermutationTextTest, RoundTrip) {
  const Permutation p{{2, 0, 1, 3}};
  EXPECT_EQ(permutation_from_text(permutation_to_text(p)), p);
  EXPECT_THROW(permutation_from_text("0 0 1"), ParseError);
  EXPECT_THROW(permutation_from_text("0 a"), ParseError);
}

TEST(CorpusTest, FamiliesAndRanges) {
  const auto corpus = parse_corpus("# demo\nstar 2..3\npath 4\ncycle 5\ncomplete 4\nasym6\n");
  ASSERT_EQ(corpus.size(), 6u);
  EXPECT_EQ(corpus[0].name, "K1_2");
  EXPECT_EQ(corpus[1].graph, star_graph(3));
  EXPECT_EQ(corpus[2].name, "P4");
  EXPECT_EQ(corpus[3].name, "C5");
  EXPECT_EQ(corpus[4].name, "K4");
  EXPECT_EQ(corpus[5].graph, asymmetric6());
  EXPECT_TRUE(parse_corpus("").empty());
}

TEST(CorpusTest, Errors) {
  EXPECT_THROW(parse_corpus("star\n"), ParseError);
  EXPECT_THROW(parse_corpus("path 5..3\n"), ParseError);
  EXPECT_THROW(parse_corpus("petersen\n"), ParseError);
  try {
    parse_corpus("path 4\nwheel 5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(FamiliesTest, Asymmetric6) {
  const Graph g = asymmetric6();
  EXPECT_EQ(g.num_vertices(), 6);
  EXPECT_EQ(g.num_edges(), 6);
}

}  // namespace
}  // namespace distinguish
