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

// Hand-transcribed reference colorings of mu(K_{1,3}),
// mu_5(K_{1,3}) and mu_2(K_{1,5}). Red = 1, blue = 2, black = 3, matching the
// DOT palette. Leaves within one level are interchangeable, so the order in
// which a drawing lists its elbows is taken as leaf order 1..m.

#ifndef DISTINGUISH_TESTS_FIXTURES_HPP_
#define DISTINGUISH_TESTS_FIXTURES_HPP_

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "distinguish/coloring.hpp"
#include "distinguish/families.hpp"
#include "distinguish/mycielski.hpp"

namespace fixtures {

using distinguish::ColoredMycielskian;
using distinguish::ColorPair;
using distinguish::Edge;
using distinguish::EdgeColoring;
using distinguish::LabeledGraph;
using distinguish::Vertex;

inline constexpr int kRed = 1;
inline constexpr int kBlue = 2;
inline constexpr int kBlack = 3;

class Painter {
 public:
  explicit Painter(LabeledGraph lg) : lg_(std::move(lg)) {}

  const LabeledGraph& graph() const { return lg_; }

  void edge(Vertex a, Vertex b, int color) { colors_[Edge(a, b)] = color; }
  void elbow(Vertex a, Vertex mid, Vertex b, ColorPair pair) {
    edge(a, mid, pair.first);
    edge(mid, b, pair.second);
  }

  ColoredMycielskian finish() const {
    std::vector<int> colors;
    for (const Edge& e : lg_.graph.edges()) {
      auto it = colors_.find(e);
      if (it == colors_.end()) throw std::logic_error("fixture left an edge uncolored");
      colors.push_back(it->second);
    }
    if (colors_.size() != colors.size()) throw std::logic_error("fixture names a non-edge");
    return {lg_, EdgeColoring(lg_.graph, colors)};
  }

 private:
  LabeledGraph lg_;
  std::map<Edge, int> colors_;
};

// mu(K_{1,3}): left elbows (u_0 v_i, v_i v_0), right elbows (w u_i, u_i v_0).
inline ColoredMycielskian drawn_mu_k13() {
  Painter p(distinguish::mycielskian(distinguish::star_graph(3)));
  const auto& lg = p.graph();
  const ColorPair left[] = {{kRed, kBlue}, {kBlue, kBlue}, {kRed, kRed}};
  const ColorPair right[] = {{kBlue, kRed}, {kBlue, kBlue}, {kRed, kRed}};
  for (int i = 1; i <= 3; ++i) {
    p.elbow(lg.at(1, 0), lg.at(0, i), lg.at(0, 0), left[i - 1]);
    p.elbow(lg.root(), lg.at(1, i), lg.at(0, 0), right[i - 1]);
  }
  p.edge(lg.at(1, 0), lg.root(), kBlue);
  return p.finish();
}

// Shared shape of the two layered drawings: level-j elbows run from the hub
// above (u_0^{j+1}, or w for the top level) to the hub below.
inline ColoredMycielskian layered(int m, int t, const std::vector<ColorPair>& lower,
                                  const std::vector<ColorPair>& top, int closing) {
  Painter p(distinguish::generalized_mycielskian(distinguish::star_graph(m), t));
  const auto& lg = p.graph();
  auto hub = [&](int level) { return level > t ? lg.root() : lg.at(level, 0); };
  for (int i = 1; i <= m; ++i) {
    p.elbow(hub(1), lg.at(0, i), hub(0), lower[i - 1]);
    for (int a = 1; a < t; ++a) p.elbow(hub(a + 1), lg.at(a, i), hub(a - 1), lower[i - 1]);
    p.elbow(lg.root(), lg.at(t, i), hub(t - 1), top[i - 1]);
  }
  p.edge(hub(t), lg.root(), closing);
  return p.finish();
}

// mu_5(K_{1,3}), left drawing.
inline ColoredMycielskian drawn_mu5_k13() {
  return layered(3, 5, {{kRed, kRed}, {kBlue, kBlue}, {kBlue, kRed}},
                 {{kRed, kRed}, {kBlue, kBlue}, {kRed, kBlue}}, kBlue);
}

// mu_2(K_{1,5}), right drawing.
inline ColoredMycielskian drawn_mu2_k15() {
  return layered(5, 2,
                 {{kBlack, kBlack}, {kBlue, kBlue}, {kBlack, kBlue}, {kBlue, kBlack},
                  {kRed, kRed}},
                 {{kBlack, kBlack}, {kBlue, kBlue}, {kBlue, kBlack}, {kBlack, kBlue},
                  {kBlack, kRed}},
                 kBlack);
}

}  // namespace fixtures

#endif  // DISTINGUISH_TESTS_FIXTURES_HPP_
