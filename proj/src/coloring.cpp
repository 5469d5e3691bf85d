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

#include "distinguish/coloring.hpp"

#include <algorithm>
#include <set>

#include "distinguish/families.hpp"

namespace distinguish {

EdgeColoring::EdgeColoring(const Graph& g, std::vector<int> colors, int num_colors)
    : n_(g.num_vertices()),
      num_colors_(num_colors),
      edges_(g.edges().begin(), g.edges().end()),
      colors_(std::move(colors)) {
  if (static_cast<int>(colors_.size()) != g.num_edges()) {
    throw std::invalid_argument("coloring has " + std::to_string(colors_.size()) +
                                " colors for " + std::to_string(g.num_edges()) +
                                " edges");
  }
  for (int c : colors_) {
    if (c < 1 || c > num_colors_) {
      throw std::invalid_argument("color " + std::to_string(c) + " outside 1.." +
                                  std::to_string(num_colors_));
    }
  }
}

EdgeColoring::EdgeColoring(const Graph& g, std::vector<int> colors)
    : EdgeColoring(g, colors,
                   colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end())) {}

EdgeColoring EdgeColoring::Uniform(const Graph& g, int color) {
  return EdgeColoring(g, std::vector<int>(g.num_edges(), color),
                      g.num_edges() == 0 ? 0 : color);
}

int EdgeColoring::color_of(Vertex u, Vertex v) const {
  const Edge key(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) {
    throw std::out_of_range("{" + std::to_string(u) + "," + std::to_string(v) +
                            "} is not an edge");
  }
  return colors_[it - edges_.begin()];
}

int EdgeColoring::max_color() const {
  return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

int EdgeColoring::distinct_colors() const {
  return static_cast<int>(std::set<int>(colors_.begin(), colors_.end()).size());
}

bool EdgeColoring::has_unused_colors() const { return distinct_colors() < num_colors_; }

bool EdgeColoring::fits(const Graph& g) const {
  return n_ == g.num_vertices() &&
         std::equal(edges_.begin(), edges_.end(), g.edges().begin(), g.edges().end());
}

int min_r(int m) {
  if (m < 2) throw std::invalid_argument("min_r needs m >= 2, got " + std::to_string(m));
  long long r = 1;
  while (r * r < static_cast<long long>(m) + 1) ++r;
  return static_cast<int>(r);
}

std::vector<ColorPair> pair_sequence(int r) {
  if (r < 1) throw std::invalid_argument("pair_sequence needs r >= 1");
  std::vector<ColorPair> pairs;
  pairs.reserve(static_cast<size_t>(r) * r);
  for (int a = 1; a <= r; ++a) {
    for (int b = 1; b <= r; ++b) pairs.push_back({a, b});
  }
  return pairs;
}

namespace {

// Accumulates colors keyed by edge, then freezes into an EdgeColoring.
class ColorAssigner {
 public:
  explicit ColorAssigner(const Graph& g) : g_(g), colors_(g.num_edges(), 0) {}

  void set(Vertex a, Vertex b, int color) {
    auto idx = g_.edge_index(a, b);
    if (!idx) {
      throw std::logic_error("no edge {" + std::to_string(a) + "," +
                             std::to_string(b) + "} to color");
    }
    colors_[*idx] = color;
  }

  void set_elbow(Vertex a, Vertex mid, Vertex b, const ColorPair& pair) {
    set(a, mid, pair.first);
    set(mid, b, pair.second);
  }

  EdgeColoring finish(int num_colors) const {
    if (std::find(colors_.begin(), colors_.end(), 0) != colors_.end()) {
      throw std::logic_error("construction left an edge uncolored");
    }
    return EdgeColoring(g_, colors_, num_colors);
  }

 private:
  const Graph& g_;
  std::vector<int> colors_;
};

}  // namespace

ColoredMycielskian star_mu_coloring(int m) {
  const int r = min_r(m);
  const auto pairs = pair_sequence(r);
  LabeledGraph lg = mycielskian(star_graph(m));
  const Vertex v0 = lg.at(0, 0);
  const Vertex u0 = lg.at(1, 0);
  const Vertex w = lg.root();
  ColorAssigner assign(lg.graph);
  for (int i = 1; i <= m; ++i) {
    assign.set_elbow(u0, lg.at(0, i), v0, pairs[i - 1]);  // L_1 gets p_i
    assign.set_elbow(w, lg.at(1, i), v0, pairs[i]);       // L_2 gets p_{i+1}
  }
  assign.set(u0, w, 1);
  EdgeColoring c = assign.finish(r);
  return {std::move(lg), std::move(c)};
}

ColoredMycielskian star_mut_coloring(int m, int t) {
  if (t < 1) throw std::invalid_argument("star_mut_coloring needs t >= 1");
  const int r = min_r(m);
  const auto pairs = pair_sequence(r);
  LabeledGraph lg = generalized_mycielskian(star_graph(m), t);
  const Vertex w = lg.root();
  auto hub = [&](int level) { return level > t ? w : lg.at(level, 0); };
  ColorAssigner assign(lg.graph);
  for (int i = 1; i <= m; ++i) {
    assign.set_elbow(hub(1), lg.at(0, i), hub(0), pairs[i - 1]);
    for (int a = 1; a < t; ++a) {
      assign.set_elbow(hub(a + 1), lg.at(a, i), hub(a - 1), pairs[i - 1]);
    }
    assign.set_elbow(w, lg.at(t, i), hub(t - 1), pairs[i]);
  }
  assign.set(hub(t), w, 1);
  EdgeColoring c = assign.finish(r);
  return {std::move(lg), std::move(c)};
}

ColoredMycielskian mimic_mut_coloring(const Graph& g, const EdgeColoring& c, int t,
                                      bool allow_star) {
  if (!c.fits(g)) throw std::invalid_argument("coloring does not fit the graph");
  if (g.num_edges() == 0) {
    throw PreconditionError("mimic coloring needs at least one edge in the base graph");
  }
  if (!allow_star) {
    if (auto star = as_star(g)) {
      throw PreconditionError(
          "base graph is the star K_{1," + std::to_string(star->m) +
          "}; its Mycielskian has an automorphism moving the root, so the "
          "mimic coloring is not guaranteed to be distinguishing (use the star "
          "coloring, or override)");
    }
  }
  LabeledGraph lg = generalized_mycielskian(g, t);
  ColorAssigner assign(lg.graph);
  const auto edges = g.edges();
  for (int idx = 0; idx < g.num_edges(); ++idx) {
    const Vertex i = edges[idx].u;
    const Vertex k = edges[idx].v;
    const int color = c.colors()[idx];
    assign.set(lg.at(0, i), lg.at(0, k), color);
    for (int j = 1; j <= t; ++j) {
      assign.set(lg.at(j - 1, i), lg.at(j, k), color);
      assign.set(lg.at(j - 1, k), lg.at(j, i), color);
    }
  }
  for (Vertex i = 0; i < g.num_vertices(); ++i) assign.set(lg.root(), lg.at(t, i), 1);
  EdgeColoring out = assign.finish(std::max(c.num_colors(), 1));
  return {std::move(lg), std::move(out)};
}

bool is_distinguishing(const Graph& g, const EdgeColoring& c, const SearchBudget& budget) {
  return !find_nontrivial_color_preserving(g, c, budget).has_value();
}

TwinLemmaReport check_twin_lemma(const Graph& g, const EdgeColoring& c,
                                 const SearchBudget& budget) {
  if (!c.fits(g)) throw std::invalid_argument("coloring does not fit the graph");
  TwinLemmaReport report;
  for (const auto& cls : twin_partition(g).classes) {
    for (size_t a = 0; a < cls.size(); ++a) {
      for (size_t b = a + 1; b < cls.size(); ++b) {
        TwinPairWitness pair{cls[a], cls[b], std::nullopt};
        for (Vertex v : g.neighbors(cls[a])) {
          if (c.color_of(v, cls[a]) != c.color_of(v, cls[b])) {
            pair.witness = v;
            break;
          }
        }
        if (!pair.witness) ++report.unwitnessed;
        report.pairs.push_back(pair);
      }
    }
  }
  try {
    report.distinguishing = is_distinguishing(g, c, budget);
  } catch (const SearchTruncated&) {
    report.distinguishing.reset();
  }
  if (report.distinguishing && *report.distinguishing && report.unwitnessed > 0) {
    report.implication_holds = false;
  }
  return report;
}

}  // namespace distinguish
