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

#include "distinguish/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace distinguish {

Permutation Permutation::Identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v) {
    if (images[v] != v) return false;
  }
  return true;
}

bool Permutation::is_bijection() const {
  std::vector<bool> hit(images.size(), false);
  for (Vertex x : images) {
    if (x < 0 || x >= size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation sizes differ");
  Permutation out;
  out.images.resize(a.images.size());
  for (int v = 0; v < b.size(); ++v) out.images[v] = a.images[b.images[v]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images.resize(images.size());
  for (int v = 0; v < size(); ++v) out.images[images[v]] = v;
  return out;
}

bool preserves_edge_labels(const Graph& g, std::span<const int> labels,
                           const Permutation& p) {
  if (p.size() != g.num_vertices()) {
    throw std::invalid_argument("permutation has " + std::to_string(p.size()) +
                                " images for a graph on " +
                                std::to_string(g.num_vertices()) + " vertices");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != g.num_edges()) {
    throw std::invalid_argument("edge label count does not match the graph");
  }
  if (!p.is_bijection()) return false;
  // A bijection that maps every edge onto an edge maps E onto E.
  const auto edges = g.edges();
  for (int idx = 0; idx < g.num_edges(); ++idx) {
    auto image = g.edge_index(p(edges[idx].u), p(edges[idx].v));
    if (!image) return false;
    if (!labels.empty() && labels[*image] != labels[idx]) return false;
  }
  return true;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  return preserves_edge_labels(g, {}, p);
}

bool preserves_coloring(const Graph& g, const EdgeColoring& c, const Permutation& p) {
  if (!c.fits(g)) throw std::invalid_argument("coloring does not fit the graph");
  return preserves_edge_labels(g, c.colors(), p);
}

namespace {

constexpr std::uint64_t kHashSeed = 0xcbf29ce484222325ULL;

inline void mix(std::uint64_t& h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

// Ranks vertices by distance profile. Automorphisms preserve distances, so
// the resulting cells are invariant.
std::vector<int> distance_profile_cells(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> profile(n);
  for (Vertex v = 0; v < n; ++v) {
    auto dist = distances_from(g, v);
    std::vector<int>& counts = profile[v];
    int unreachable = 0;
    for (const auto& d : dist) {
      if (!d) {
        ++unreachable;
        continue;
      }
      if (static_cast<int>(counts.size()) <= *d) counts.resize(*d + 1, 0);
      ++counts[*d];
    }
    counts.push_back(-unreachable);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return profile[a] < profile[b]; });
  std::vector<int> cells(n, 0);
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && profile[order[i]] != profile[order[i - 1]]) ++rank;
    cells[order[i]] = rank;
  }
  return cells;
}

// Equitable refinement of vertex cells with respect to labeled adjacency.
class Refiner {
 public:
  Refiner(const Graph& g, std::span<const int> labels) : g_(g) {
    const int n = g.num_vertices();
    offsets_.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
      offsets_[v + 1] = offsets_[v] + static_cast<int>(g.neighbors(v).size());
    }
    arcs_.reserve(offsets_[n]);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex u : g.neighbors(v)) {
        arcs_.push_back({u, labels.empty() ? 0 : labels[*g.edge_index(u, v)]});
      }
    }
  }

  // Refines cells in place; on return they are ranks 0..count-1. Returns the
  // number of cells and folds the refinement trace into trace.
  int refine(std::vector<int>& cells, std::uint64_t& trace) const {
    const int n = g_.num_vertices();
    int count = count_distinct(cells);
    std::vector<std::vector<std::int64_t>> sig(n);
    std::vector<int> order(n);
    for (;;) {
      for (Vertex v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.clear();
        s.reserve(offsets_[v + 1] - offsets_[v] + 1);
        for (int a = offsets_[v]; a < offsets_[v + 1]; ++a) {
          s.push_back((static_cast<std::int64_t>(cells[arcs_[a].first]) << 32) |
                      static_cast<std::uint32_t>(arcs_[a].second));
        }
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), cells[v]);
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return sig[a] < sig[b]; });
      int rank = -1;
      for (int i = 0; i < n; ++i) {
        const bool fresh = i == 0 || sig[order[i]] != sig[order[i - 1]];
        if (fresh) {
          ++rank;
          mix(trace, 0xabcdefULL);
          for (std::int64_t x : sig[order[i]]) mix(trace, static_cast<std::uint64_t>(x));
        }
        mix(trace, 1);
        cells[order[i]] = rank;
      }
      const int next = rank + 1;
      if (next == count) return count;
      count = next;
    }
  }

 private:
  static int count_distinct(const std::vector<int>& cells) {
    std::vector<int> copy(cells);
    std::sort(copy.begin(), copy.end());
    return static_cast<int>(std::unique(copy.begin(), copy.end()) - copy.begin());
  }

  const Graph& g_;
  std::vector<int> offsets_;
  // (neighbor, edge label) per vertex, CSR layout.
  std::vector<std::pair<Vertex, int>> arcs_;
};

// Individualization-refinement search. The left path individualizes a fixed
// vertex per level; the right side branches over every vertex in the
// matching cell, so each automorphism corresponds to exactly one leaf.
class IrSearch {
 public:
  // Return false from the visitor to stop the search.
  using Visitor = std::function<bool(const Permutation&)>;

  IrSearch(const Graph& g, std::span<const int> labels, const SearchBudget& budget)
      : g_(g), labels_(labels), refiner_(g, labels), budget_(budget) {}

  void run(const Visitor& visit) {
    visit_ = &visit;
    std::vector<int> cells = distance_profile_cells(g_);
    std::uint64_t trace = kHashSeed;
    const int count = refiner_.refine(cells, trace);
    recurse(cells, count, cells);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool recurse(const std::vector<int>& left, int count, const std::vector<int>& right) {
    if (++nodes_ > budget_.node_limit) {
      throw SearchTruncated("automorphism search exceeded " +
                                std::to_string(budget_.node_limit) + " nodes",
                            nodes_);
    }
    const int n = g_.num_vertices();
    if (count == n) {
      std::vector<Vertex> by_cell(n);
      for (Vertex x = 0; x < n; ++x) by_cell[right[x]] = x;
      Permutation p;
      p.images.resize(n);
      for (Vertex v = 0; v < n; ++v) p.images[v] = by_cell[left[v]];
      if (!preserves_edge_labels(g_, labels_, p)) return true;
      return (*visit_)(p);
    }
    // Smallest non-singleton cell, lowest label on ties.
    std::vector<int> size(count, 0);
    for (int c : left) ++size[c];
    int target = -1;
    for (int c = 0; c < count; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    Vertex pivot = 0;
    while (left[pivot] != target) ++pivot;

    std::vector<int> next_left = individualize(left, pivot);
    std::uint64_t left_trace = kHashSeed;
    const int next_count = refiner_.refine(next_left, left_trace);
    for (Vertex x = 0; x < n; ++x) {
      if (right[x] != target) continue;
      std::vector<int> next_right = individualize(right, x);
      std::uint64_t right_trace = kHashSeed;
      const int right_count = refiner_.refine(next_right, right_trace);
      if (right_count != next_count || right_trace != left_trace) continue;
      if (!recurse(next_left, next_count, next_right)) return false;
    }
    return true;
  }

  static std::vector<int> individualize(const std::vector<int>& cells, Vertex v) {
    std::vector<int> out(cells.size());
    for (size_t u = 0; u < cells.size(); ++u) out[u] = 2 * cells[u] + 1;
    out[v] = 2 * cells[v];
    return out;
  }

  const Graph& g_;
  std::span<const int> labels_;
  Refiner refiner_;
  SearchBudget budget_;
  const Visitor* visit_ = nullptr;
  std::uint64_t nodes_ = 0;
};

void check_labels(const Graph& g, std::span<const int> labels) {
  if (static_cast<int>(labels.size()) != g.num_edges()) {
    throw std::invalid_argument("expected " + std::to_string(g.num_edges()) +
                                " edge labels, got " + std::to_string(labels.size()));
  }
}

}  // namespace

std::vector<Permutation> enumerate_label_preserving(const Graph& g,
                                                    std::span<const int> labels,
                                                    const SearchBudget& budget,
                                                    SearchStats* stats) {
  if (!labels.empty()) check_labels(g, labels);
  std::vector<Permutation> found;
  IrSearch search(g, labels, budget);
  try {
    search.run([&](const Permutation& p) {
      found.push_back(p);
      return !(budget.found_limit && found.size() >= *budget.found_limit);
    });
  } catch (...) {
    if (stats) stats->nodes += search.nodes();
    throw;
  }
  if (stats) stats->nodes += search.nodes();
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Permutation> enumerate_automorphisms(const Graph& g,
                                                 const SearchBudget& budget,
                                                 SearchStats* stats) {
  return enumerate_label_preserving(g, {}, budget, stats);
}

std::optional<Permutation> find_nontrivial_label_preserving(
    const Graph& g, std::span<const int> labels, const SearchBudget& budget,
    SearchStats* stats) {
  check_labels(g, labels);
  std::optional<Permutation> found;
  IrSearch search(g, labels, budget);
  try {
    search.run([&](const Permutation& p) {
      if (p.is_identity()) return true;
      found = p;
      return false;
    });
  } catch (...) {
    if (stats) stats->nodes += search.nodes();
    throw;
  }
  if (stats) stats->nodes += search.nodes();
  return found;
}

std::optional<Permutation> find_nontrivial_color_preserving(
    const Graph& g, const EdgeColoring& coloring, const SearchBudget& budget,
    SearchStats* stats) {
  if (!coloring.fits(g)) throw std::invalid_argument("coloring does not fit the graph");
  return find_nontrivial_label_preserving(g, coloring.colors(), budget, stats);
}

std::optional<Permutation> find_nontrivial_wild_compatible(
    const Graph& g, std::span<const int> labels, const SearchBudget& budget,
    SearchStats* stats) {
  check_labels(g, labels);
  const int n = g.num_vertices();
  // Wild labels cannot drive refinement, so candidate cells come from the
  // unlabeled structure only.
  std::vector<int> cells = distance_profile_cells(g);
  std::uint64_t trace = kHashSeed;
  Refiner(g, {}).refine(cells, trace);

  // -1: no edge, otherwise the edge label.
  std::vector<int> dense(static_cast<size_t>(n) * n, -1);
  for (int idx = 0; idx < g.num_edges(); ++idx) {
    const Edge& e = g.edges()[idx];
    dense[static_cast<size_t>(e.u) * n + e.v] = labels[idx];
    dense[static_cast<size_t>(e.v) * n + e.u] = labels[idx];
  }
  auto at = [&](Vertex a, Vertex b) { return dense[static_cast<size_t>(a) * n + b]; };

  // Breadth-first order per component so that each vertex after the first
  // has an already placed neighbor constraining it.
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<bool> placed(n, false);
  std::vector<Vertex> starts(n);
  std::iota(starts.begin(), starts.end(), 0);
  std::vector<int> cell_size(n, 0);
  for (int c : cells) ++cell_size[c];
  std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) {
    return cell_size[cells[a]] < cell_size[cells[b]];
  });
  for (Vertex s : starts) {
    if (placed[s]) continue;
    placed[s] = true;
    order.push_back(s);
    for (size_t head = order.size() - 1; head < order.size(); ++head) {
      for (Vertex y : g.neighbors(order[head])) {
        if (!placed[y]) {
          placed[y] = true;
          order.push_back(y);
        }
      }
    }
  }

  std::vector<Vertex> image(n, -1);
  std::vector<bool> used(n, false);
  std::uint64_t nodes = 0;
  std::optional<Permutation> found;

  std::function<bool(int)> descend = [&](int depth) -> bool {
    if (++nodes > budget.node_limit) {
      throw SearchTruncated("wild-compatible search exceeded " +
                                std::to_string(budget.node_limit) + " nodes",
                            nodes);
    }
    if (depth == n) {
      Permutation p{image};
      if (p.is_identity()) return false;
      found = std::move(p);
      return true;
    }
    const Vertex v = order[depth];
    for (Vertex x = 0; x < n; ++x) {
      if (used[x] || cells[x] != cells[v]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const Vertex u = order[d];
        const int a = at(u, v);
        const int b = at(image[u], x);
        if ((a < 0) != (b < 0)) {
          ok = false;
        } else if (a > 0 && b > 0 && a != b) {
          ok = false;
        }
      }
      if (!ok) continue;
      image[v] = x;
      used[x] = true;
      if (descend(depth + 1)) return true;
      used[x] = false;
      image[v] = -1;
    }
    return false;
  };
  try {
    descend(0);
  } catch (...) {
    if (stats) stats->nodes += nodes;
    throw;
  }
  if (stats) stats->nodes += nodes;
  return found;
}

RootReport verify_root_behavior(const Graph& g, int t, const SearchBudget& budget) {
  RootReport report;
  report.mycielskian = generalized_mycielskian(g, t);
  report.star = as_star(g);
  const LabeledGraph& lg = report.mycielskian;
  const Vertex w = lg.root();
  std::set<Vertex> images;
  std::uint64_t order = 0;
  // found_limit is ignored: the whole group is needed.
  SearchBudget all{budget.node_limit, std::nullopt};
  IrSearch search(lg.graph, {}, all);
  search.run([&](const Permutation& p) {
    ++order;
    images.insert(p(w));
    return true;
  });
  report.group_order = order;
  report.root_images.assign(images.begin(), images.end());
  report.root_fixed = report.root_images == std::vector<Vertex>{w};
  if (!report.star) {
    report.matches_expected = report.root_fixed;
  } else if (report.star->m >= 2) {
    const Vertex shadow = lg.at(t, report.star->center);
    report.center_shadow = shadow;
    report.matches_expected = std::all_of(
        images.begin(), images.end(), [&](Vertex x) { return x == w || x == shadow; });
  }
  return report;
}

}  // namespace distinguish
