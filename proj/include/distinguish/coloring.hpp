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

#ifndef DISTINGUISH_COLORING_HPP_
#define DISTINGUISH_COLORING_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "distinguish/automorphism.hpp"
#include "distinguish/edge_coloring.hpp"
#include "distinguish/graph.hpp"
#include "distinguish/mycielski.hpp"

namespace distinguish {

struct ColorPair {
  int first = 1;
  int second = 1;

  auto operator<=>(const ColorPair&) const = default;
};

// A constructor's guarantee does not apply to this input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Least r with r * r >= m + 1, in exact integer arithmetic. m >= 2.
int min_r(int m);

// All r^2 ordered pairs of colors 1..r in lexicographic order:
// (1,1), (1,2), ..., (r,r).
std::vector<ColorPair> pair_sequence(int r);

struct ColoredMycielskian {
  LabeledGraph graph;
  EdgeColoring coloring;
};

// mu(K_{1,m}) with the elbow coloring on min_r(m) colors. The star is
// numbered center 0, leaves 1..m.
ColoredMycielskian star_mu_coloring(int m);

// mu_t(K_{1,m}) with the layered elbow coloring on min_r(m) colors.
//   level-0 elbows (u_0^1 u_i^0, u_i^0 u_0^0)            -> p_i
//   level-a elbows (u_0^{a+1} u_i^a, u_i^a u_0^{a-1})     -> p_i, 1 <= a < t
//   top elbows     (w u_i^t, u_i^t u_0^{t-1})             -> p_{i+1}
//   u_0^t w                                              -> color 1
// The first color of a pair goes to the first edge of the elbow.
ColoredMycielskian star_mut_coloring(int m, int t);

// Copies c onto mu_t(g): each level-0 edge and every cross edge generated by
// {i,k} keeps c({i,k}); root edges get color 1. Stars are refused with a
// PreconditionError unless allow_star is set, as are edgeless graphs.
ColoredMycielskian mimic_mut_coloring(const Graph& g, const EdgeColoring& c, int t,
                                      bool allow_star = false);

// Throws SearchTruncated when the search cannot settle the question.
bool is_distinguishing(const Graph& g, const EdgeColoring& c,
                       const SearchBudget& budget = {});

struct TwinPairWitness {
  Vertex x1 = 0;
  Vertex x2 = 0;
  // A common neighbor v with c(v x1) != c(v x2), if any.
  std::optional<Vertex> witness;
};

struct TwinLemmaReport {
  std::vector<TwinPairWitness> pairs;
  int unwitnessed = 0;
  // Set when the distinguishing search completed within budget.
  std::optional<bool> distinguishing;
  // False only when a pair is unwitnessed yet the coloring is distinguishing.
  bool implication_holds = true;
};

// For every twin pair, looks for a common neighbor whose two edges differ in
// color, then cross-checks: any unwitnessed pair forces non-distinguishing.
TwinLemmaReport check_twin_lemma(const Graph& g, const EdgeColoring& c,
                                 const SearchBudget& budget = {});

}  // namespace distinguish

#endif  // DISTINGUISH_COLORING_HPP_
