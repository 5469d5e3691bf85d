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

#ifndef DISTINGUISH_SOLVER_HPP_
#define DISTINGUISH_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "distinguish/automorphism.hpp"
#include "distinguish/coloring.hpp"
#include "distinguish/edge_coloring.hpp"
#include "distinguish/graph.hpp"

namespace distinguish {

// The graph has no distinguishing index (K_2 component, several isolated
// vertices) or no edges to color.
class UndefinedIndex : public std::invalid_argument {
 public:
  UndefinedIndex(IndexRule rule, const std::string& what)
      : std::invalid_argument(what), rule_(rule) {}
  IndexRule rule() const { return rule_; }

 private:
  IndexRule rule_;
};

// The request is larger than the exact solver is prepared to attempt.
class OutsideEnvelope : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SolverOptions {
  int max_edges = 48;
  int max_colors = 6;
  // Per-call budget of the automorphism searches made at each node. A leaf
  // verification that runs out is a SearchTruncated; an internal pruning
  // check that runs out simply does not prune.
  SearchBudget check_budget{500'000, std::nullopt};
  // Reject a partial coloring when a non-trivial automorphism preserves its
  // colors while fixing every uncolored edge.
  bool early_reject = true;
  // Accept a partial coloring when no non-trivial automorphism is compatible
  // with it even treating uncolored edges as wild.
  bool early_accept = true;
  std::uint64_t accept_probe_nodes = 2'000;
  // Parallel variant only: expand the tree breadth-first until at least this
  // many independent subtrees exist (0 picks 8 per thread).
  int parallel_min_tasks = 0;
};

struct Existence {
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes = 0;
};

// Search order of edge indices: edges at larger twin classes first, the
// edges of one twin grouped together.
std::vector<int> search_edge_order(const Graph& g);

// A distinguishing coloring with at most k colors, or none. An empty result
// proves nonexistence. Colors are assigned along search_edge_order with
// color-symmetry breaking (a new color is only opened after all lower ones
// appear). Throws UndefinedIndex, OutsideEnvelope, SearchTruncated.
//
// The parallel version splits the tree into prefixes explored under OpenMP
// and returns the same witness as the serial one.
Existence exists_distinguishing(const Graph& g, int k,
                                const SearchBudget& budget = {10'000'000, std::nullopt},
                                const SolverOptions& options = {});

Existence exists_distinguishing_serial(const Graph& g, int k,
                                       const SearchBudget& budget = {10'000'000,
                                                                     std::nullopt},
                                       const SolverOptions& options = {});

struct NonexistenceCertificate {
  int colors = 0;
  std::uint64_t nodes = 0;
};

struct IndexResult {
  int index = 0;
  EdgeColoring witness;
  // One exhausted search per k below the index.
  std::vector<NonexistenceCertificate> certificates;
  // The witness came from the caller's upper-bound coloring.
  bool witness_from_hint = false;
};

// Ascends k = 1, 2, ... until a distinguishing coloring exists. When
// upper_bound is a verified distinguishing coloring with h colors the search
// stops at h and returns it, since every smaller k has been refuted by then.
IndexResult distinguishing_index(const Graph& g,
                                 const SearchBudget& budget = {10'000'000, std::nullopt},
                                 const SolverOptions& options = {},
                                 const std::optional<EdgeColoring>& upper_bound = {});

struct InequalityReport {
  int t = 1;
  std::optional<StarShape> star;
  std::optional<int> dist_g;
  std::optional<EdgeColoring> base_witness;
  std::optional<ColoredMycielskian> construction;
  int construction_colors = 0;
  bool construction_verified = false;
  // Exact index of mu_t(g), when requested and within the envelope.
  std::optional<int> dist_mu;
  bool inequality_holds = false;
  // Phase that ran out of budget or left the envelope, if any.
  std::optional<std::string> incomplete_phase;
};

// Computes the index of g, builds the matching coloring of mu_t(g) (mimic
// for non-stars, the layered star coloring for stars), verifies it, and
// optionally computes the index of mu_t(g) exactly. Throws PreconditionError
// when g has fewer than 3 vertices or no defined index, or when t >= 2 and
// g is a non-star with an isolated vertex.
InequalityReport verify_inequality(const Graph& g, int t,
                                   const SearchBudget& budget = {10'000'000,
                                                                 std::nullopt},
                                   const SolverOptions& options = {},
                                   bool exact_mu = true);

}  // namespace distinguish

#endif  // DISTINGUISH_SOLVER_HPP_
