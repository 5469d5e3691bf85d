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

#ifndef DISTINGUISH_EXPERIMENT_HPP_
#define DISTINGUISH_EXPERIMENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "distinguish/families.hpp"
#include "distinguish/solver.hpp"

namespace distinguish {

struct ExperimentOptions {
  int t_min = 1;
  int t_max = 1;
  SearchBudget budget{10'000'000, std::nullopt};
  SolverOptions solver;
  // Compute the index of mu_t(G) exactly where the solver envelope allows;
  // otherwise rows report the verified construction as an upper bound.
  bool exact_mu = true;
};

struct ExperimentRow {
  std::string graph;
  int n = 0;
  int edges = 0;
  std::optional<int> dist_g;
  int t = 1;
  // Exact index when dist_mu_exact, else the verified upper bound.
  std::optional<int> dist_mu;
  bool dist_mu_exact = false;
  bool construction_verified = false;
  // Unset when the row could not be decided.
  std::optional<bool> inequality_holds;
  std::string note;
};

// One row per (graph, t), in corpus order then ascending t. Rows run in
// parallel; the output order does not depend on scheduling.
std::vector<ExperimentRow> run_experiment(const std::vector<NamedGraph>& corpus,
                                          const ExperimentOptions& options);

// Same rows, computed one after another.
std::vector<ExperimentRow> run_experiment_serial(const std::vector<NamedGraph>& corpus,
                                                 const ExperimentOptions& options);

inline constexpr const char* kExperimentCsvHeader =
    "graph,n,edges,dist_g,t,dist_mu,dist_mu_exact,construction_verified,"
    "inequality_holds,note";

std::string rows_to_csv(const std::vector<ExperimentRow>& rows);

}  // namespace distinguish

#endif  // DISTINGUISH_EXPERIMENT_HPP_
