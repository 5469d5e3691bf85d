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

#include "distinguish/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <limits>

#include "solver_kernel.hpp"

namespace distinguish {
namespace {

struct Task {
  internal::PartialColoring state;
  std::optional<std::vector<int>> solved;
};

// Breadth-first expansion that keeps entries in depth-first order, so the
// lowest-index task with a solution holds the serial search's answer.
std::vector<Task> expand_frontier(internal::BranchKernel& kernel, size_t target) {
  std::vector<Task> frontier;
  frontier.push_back({kernel.root(), std::nullopt});
  for (;;) {
    const bool any_open = std::any_of(frontier.begin(), frontier.end(),
                                      [](const Task& t) { return !t.solved; });
    if (!any_open || frontier.size() >= target) return frontier;
    std::vector<Task> next;
    for (Task& task : frontier) {
      if (task.solved) {
        next.push_back(std::move(task));
        break;  // nothing after a solution can win
      }
      std::vector<int> solution;
      switch (kernel.visit(task.state, solution)) {
        case internal::NodeVerdict::kSolved:
          next.push_back({std::move(task.state), std::move(solution)});
          break;
        case internal::NodeVerdict::kRejected:
          break;
        case internal::NodeVerdict::kOpen:
          for (auto& child : kernel.children(task.state)) {
            next.push_back({std::move(child), std::nullopt});
          }
          break;
      }
      if (!next.empty() && next.back().solved) break;
    }
    if (next.empty()) return next;
    // Every remaining entry has been visited once; a frontier made only of
    // leaves cannot grow further.
    frontier = std::move(next);
    if (std::all_of(frontier.begin(), frontier.end(), [&](const Task& t) {
          return t.solved || t.state.depth == kernel.num_edges();
        })) {
      return frontier;
    }
  }
}

}  // namespace

Existence exists_distinguishing(const Graph& g, int k, const SearchBudget& budget,
                                const SolverOptions& options) {
  internal::check_solver_input(g, k, options);
  std::atomic<std::uint64_t> nodes{0};
  internal::BranchKernel kernel(g, k, budget, options, nodes);
  const size_t target = options.parallel_min_tasks > 0
                            ? static_cast<size_t>(options.parallel_min_tasks)
                            : static_cast<size_t>(8 * omp_get_max_threads());
  std::vector<Task> tasks = expand_frontier(kernel, target);

  const long count = static_cast<long>(tasks.size());
  std::atomic<long> best{count};
  std::vector<std::optional<std::vector<int>>> results(count);
  std::vector<std::exception_ptr> errors(count);

#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    if (best.load() < i) continue;
    try {
      if (tasks[i].solved) {
        results[i] = tasks[i].solved;
      } else {
        results[i] = kernel.dfs(tasks[i].state, [&best, i] { return best.load() < i; });
      }
      if (results[i]) {
        long seen = best.load();
        while (i < seen && !best.compare_exchange_weak(seen, i)) {
        }
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  Existence out;
  for (long i = 0; i < count; ++i) {
    // A failure before the first solution means the serial order was not
    // completed; report it instead of a possibly different witness.
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (results[i]) {
      out.coloring = kernel.to_coloring(*results[i]);
      break;
    }
  }
  out.nodes = nodes.load();
  return out;
}

IndexResult distinguishing_index(const Graph& g, const SearchBudget& budget,
                                 const SolverOptions& options,
                                 const std::optional<EdgeColoring>& upper_bound) {
  internal::check_solver_input(g, 1, options);
  std::optional<int> hint_colors;
  if (upper_bound) {
    if (!upper_bound->fits(g)) {
      throw std::invalid_argument("upper-bound coloring does not fit the graph");
    }
    if (is_distinguishing(g, *upper_bound, options.check_budget)) {
      hint_colors = upper_bound->distinct_colors();
    }
  }
  IndexResult result;
  for (int k = 1; k <= options.max_colors; ++k) {
    if (hint_colors && k >= *hint_colors) {
      result.index = k;
      result.witness = *upper_bound;
      result.witness_from_hint = true;
      return result;
    }
    Existence e = exists_distinguishing(g, k, budget, options);
    if (e.coloring) {
      result.index = k;
      result.witness = std::move(*e.coloring);
      return result;
    }
    result.certificates.push_back({k, e.nodes});
  }
  throw OutsideEnvelope("no distinguishing coloring with at most " +
                        std::to_string(options.max_colors) + " colors");
}

namespace {

// Moves the canonical star coloring of mu_t(K_{1,m}) onto mu_t(g) for a star
// g numbered arbitrarily.
EdgeColoring transport_star_coloring(const Graph& g, const StarShape& star,
                                     const ColoredMycielskian& canonical,
                                     const LabeledGraph& target) {
  std::vector<Vertex> to_canonical(g.num_vertices());
  to_canonical[star.center] = 0;
  Vertex next = 1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (v != star.center) to_canonical[v] = next++;
  }
  auto map_vertex = [&](Vertex x) {
    const VertexRole& role = target.roles[x];
    if (role.is_root) return canonical.graph.root();
    return canonical.graph.at(role.level, to_canonical[role.original]);
  };
  std::vector<int> colors;
  colors.reserve(target.graph.num_edges());
  for (const Edge& e : target.graph.edges()) {
    colors.push_back(canonical.coloring.color_of(map_vertex(e.u), map_vertex(e.v)));
  }
  return EdgeColoring(target.graph, std::move(colors), canonical.coloring.num_colors());
}

}  // namespace

InequalityReport verify_inequality(const Graph& g, int t, const SearchBudget& budget,
                                   const SolverOptions& options, bool exact_mu) {
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  if (g.num_vertices() < 3) throw PreconditionError("graph needs at least 3 vertices");
  if (auto defined = index_defined(g); !defined) {
    throw PreconditionError("index undefined: " + defined.reason);
  }
  InequalityReport report;
  report.t = t;
  report.star = as_star(g);
  if (!report.star && t >= 2) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (degree(g, v) == 0) {
        throw PreconditionError("isolated vertex " + std::to_string(v) +
                                " would leave two isolated vertices in mu_t for t >= 2");
      }
    }
  }

  try {
    IndexResult base = distinguishing_index(g, budget, options);
    report.dist_g = base.index;
    report.base_witness = base.witness;
  } catch (const SearchTruncated&) {
    report.incomplete_phase = "index of G (budget)";
    return report;
  } catch (const OutsideEnvelope& e) {
    report.incomplete_phase = std::string("index of G (") + e.what() + ")";
    return report;
  }

  if (report.star) {
    ColoredMycielskian canonical = star_mut_coloring(report.star->m, t);
    LabeledGraph target = generalized_mycielskian(g, t);
    EdgeColoring moved = transport_star_coloring(g, *report.star, canonical, target);
    report.construction = ColoredMycielskian{std::move(target), std::move(moved)};
  } else {
    report.construction = mimic_mut_coloring(g, *report.base_witness, t);
  }
  const ColoredMycielskian& built = *report.construction;
  report.construction_colors = built.coloring.distinct_colors();
  try {
    report.construction_verified =
        is_distinguishing(built.graph.graph, built.coloring, options.check_budget);
  } catch (const SearchTruncated&) {
    report.incomplete_phase = "construction verification (budget)";
    return report;
  }

  int upper = report.construction_verified ? report.construction_colors
                                           : std::numeric_limits<int>::max();
  if (exact_mu) {
    try {
      std::optional<EdgeColoring> hint;
      if (report.construction_verified) hint = built.coloring;
      IndexResult mu = distinguishing_index(built.graph.graph, budget, options, hint);
      report.dist_mu = mu.index;
      upper = mu.index;
    } catch (const SearchTruncated&) {
      report.incomplete_phase = "index of mu_t(G) (budget)";
    } catch (const OutsideEnvelope& e) {
      report.incomplete_phase = std::string("index of mu_t(G) (") + e.what() + ")";
    }
  }
  report.inequality_holds = upper <= *report.dist_g;
  return report;
}

}  // namespace distinguish
