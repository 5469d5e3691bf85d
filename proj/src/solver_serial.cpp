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

// Serial reference solver and the branch kernel it shares with the
// parallel version.

#include <algorithm>
#include <numeric>
#include <tuple>

#include "solver_kernel.hpp"

namespace distinguish {

std::vector<int> search_edge_order(const Graph& g) {
  const TwinPartition twins = twin_partition(g);
  auto class_size = [&](Vertex v) {
    return static_cast<int>(twins.classes[twins.class_of[v]].size());
  };
  using Key = std::tuple<int, int, Vertex, Vertex>;
  std::vector<Key> keys(g.num_edges());
  for (int idx = 0; idx < g.num_edges(); ++idx) {
    const Edge& e = g.edges()[idx];
    // The twin endpoint is the one in the larger class.
    const bool u_twin = class_size(e.u) >= class_size(e.v);
    const Vertex twin = u_twin ? e.u : e.v;
    const Vertex other = u_twin ? e.v : e.u;
    keys[idx] = {-class_size(twin), twins.class_of[twin], twin, other};
  }
  std::vector<int> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return keys[a] < keys[b]; });
  return order;
}

namespace internal {

void check_solver_input(const Graph& g, int k, const SolverOptions& options) {
  if (auto defined = index_defined(g); !defined) {
    throw UndefinedIndex(defined.rule, "index undefined: " + defined.reason);
  }
  if (g.num_edges() == 0) {
    throw UndefinedIndex(IndexRule::kDefined, "index undefined: graph has no edges");
  }
  if (k < 1) throw std::invalid_argument("number of colors must be positive");
  if (g.num_edges() > options.max_edges) {
    throw OutsideEnvelope("exact solver is limited to " +
                          std::to_string(options.max_edges) + " edges, graph has " +
                          std::to_string(g.num_edges()));
  }
  if (k > options.max_colors) {
    throw OutsideEnvelope("exact solver is limited to " +
                          std::to_string(options.max_colors) + " colors, asked for " +
                          std::to_string(k));
  }
}

BranchKernel::BranchKernel(const Graph& g, int k, const SearchBudget& budget,
                           const SolverOptions& options,
                           std::atomic<std::uint64_t>& nodes)
    : g_(g),
      k_(k),
      budget_(budget),
      options_(options),
      nodes_(nodes),
      order_(search_edge_order(g)) {}

PartialColoring BranchKernel::root() const {
  return PartialColoring{std::vector<int>(g_.num_edges(), 0), 0, 0};
}

bool BranchKernel::leaf_distinguishing(const std::vector<int>& colors) {
  return !find_nontrivial_label_preserving(g_, colors, options_.check_budget).has_value();
}

NodeVerdict BranchKernel::visit(const PartialColoring& state, std::vector<int>& solution) {
  const std::uint64_t count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
  if (count > budget_.node_limit) {
    throw SearchTruncated("solver exceeded " + std::to_string(budget_.node_limit) +
                              " nodes",
                          count);
  }
  const int m = num_edges();
  if (state.depth == m) {
    if (!leaf_distinguishing(state.colors)) return NodeVerdict::kRejected;
    solution = state.colors;
    return NodeVerdict::kSolved;
  }
  if (state.depth == 0) return NodeVerdict::kOpen;

  if (options_.early_reject) {
    // Uncolored edges get private labels, so they must be fixed.
    std::vector<int> labels(state.colors);
    for (int e = 0; e < m; ++e) {
      if (labels[e] == 0) labels[e] = k_ + 1 + e;
    }
    try {
      if (find_nontrivial_label_preserving(g_, labels, options_.check_budget)) {
        return NodeVerdict::kRejected;
      }
    } catch (const SearchTruncated&) {
    }
  }
  if (options_.early_accept) {
    bool none_compatible = false;
    try {
      none_compatible = !find_nontrivial_wild_compatible(
                             g_, state.colors, {options_.accept_probe_nodes, std::nullopt})
                             .has_value();
    } catch (const SearchTruncated&) {
    }
    if (none_compatible) {
      std::vector<int> completed(state.colors);
      for (int& c : completed) {
        if (c == 0) c = 1;
      }
      if (leaf_distinguishing(completed)) {
        solution = std::move(completed);
        return NodeVerdict::kSolved;
      }
    }
  }
  return NodeVerdict::kOpen;
}

std::vector<PartialColoring> BranchKernel::children(const PartialColoring& state) const {
  std::vector<PartialColoring> out;
  const int edge = order_[state.depth];
  const int top = std::min(k_, state.max_used + 1);
  out.reserve(top);
  for (int color = 1; color <= top; ++color) {
    PartialColoring child = state;
    child.colors[edge] = color;
    child.depth = state.depth + 1;
    child.max_used = std::max(state.max_used, color);
    out.push_back(std::move(child));
  }
  return out;
}

std::optional<std::vector<int>> BranchKernel::dfs(const PartialColoring& state,
                                                  const std::function<bool()>& cancelled) {
  if (cancelled && cancelled()) return std::nullopt;
  std::vector<int> solution;
  switch (visit(state, solution)) {
    case NodeVerdict::kSolved:
      return solution;
    case NodeVerdict::kRejected:
      return std::nullopt;
    case NodeVerdict::kOpen:
      break;
  }
  for (const PartialColoring& child : children(state)) {
    if (auto found = dfs(child, cancelled)) return found;
  }
  return std::nullopt;
}

EdgeColoring BranchKernel::to_coloring(const std::vector<int>& colors) const {
  return EdgeColoring(g_, colors);
}

}  // namespace internal

Existence exists_distinguishing_serial(const Graph& g, int k, const SearchBudget& budget,
                                       const SolverOptions& options) {
  internal::check_solver_input(g, k, options);
  std::atomic<std::uint64_t> nodes{0};
  internal::BranchKernel kernel(g, k, budget, options, nodes);
  Existence out;
  if (auto found = kernel.dfs(kernel.root(), {})) out.coloring = kernel.to_coloring(*found);
  out.nodes = nodes.load();
  return out;
}

}  // namespace distinguish
