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

// Branch kernel shared by the serial and parallel solvers.

#ifndef DISTINGUISH_SRC_SOLVER_KERNEL_HPP_
#define DISTINGUISH_SRC_SOLVER_KERNEL_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "distinguish/solver.hpp"

namespace distinguish::internal {

// Partial assignment along the search order. colors[e] == 0 means unassigned.
struct PartialColoring {
  std::vector<int> colors;
  int depth = 0;
  int max_used = 0;
};

enum class NodeVerdict {
  kOpen,       // keep branching
  kRejected,   // no completion is distinguishing
  kSolved,     // solution holds a verified coloring
};

class BranchKernel {
 public:
  BranchKernel(const Graph& g, int k, const SearchBudget& budget,
               const SolverOptions& options, std::atomic<std::uint64_t>& nodes);

  const std::vector<int>& order() const { return order_; }
  int num_edges() const { return static_cast<int>(order_.size()); }
  int k() const { return k_; }

  PartialColoring root() const;

  // Counts the node against the budget and classifies it. On kSolved the
  // verified coloring is stored in solution.
  NodeVerdict visit(const PartialColoring& state, std::vector<int>& solution);

  // Children in color order, respecting color-symmetry breaking.
  std::vector<PartialColoring> children(const PartialColoring& state) const;

  // Depth-first search below state. cancelled() is polled at each node; when
  // it returns true the search gives up with nullopt.
  std::optional<std::vector<int>> dfs(const PartialColoring& state,
                                      const std::function<bool()>& cancelled);

  EdgeColoring to_coloring(const std::vector<int>& colors) const;

 private:
  bool leaf_distinguishing(const std::vector<int>& colors);

  const Graph& g_;
  int k_;
  SearchBudget budget_;
  SolverOptions options_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<int> order_;
};

// Shared argument validation for both solver variants.
void check_solver_input(const Graph& g, int k, const SolverOptions& options);

}  // namespace distinguish::internal

#endif  // DISTINGUISH_SRC_SOLVER_KERNEL_HPP_
