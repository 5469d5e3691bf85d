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

#include "distinguish/experiment.hpp"

#include <sstream>

namespace distinguish {
namespace {

ExperimentRow run_row(const NamedGraph& entry, int t, const ExperimentOptions& options) {
  ExperimentRow row;
  row.graph = entry.name;
  row.n = entry.graph.num_vertices();
  row.edges = entry.graph.num_edges();
  row.t = t;
  try {
    InequalityReport report =
        verify_inequality(entry.graph, t, options.budget, options.solver, options.exact_mu);
    row.dist_g = report.dist_g;
    row.construction_verified = report.construction_verified;
    if (report.dist_mu) {
      row.dist_mu = report.dist_mu;
      row.dist_mu_exact = true;
    } else if (report.construction_verified) {
      row.dist_mu = report.construction_colors;
    }
    if (report.dist_g && row.dist_mu) {
      row.inequality_holds = report.inequality_holds;
    }
    if (report.incomplete_phase) row.note = "incomplete: " + *report.incomplete_phase;
  } catch (const std::exception& e) {
    row.note = std::string("skipped: ") + e.what();
  }
  return row;
}

std::vector<std::pair<size_t, int>> row_plan(const std::vector<NamedGraph>& corpus,
                                             const ExperimentOptions& options) {
  std::vector<std::pair<size_t, int>> plan;
  for (size_t g = 0; g < corpus.size(); ++g) {
    for (int t = options.t_min; t <= options.t_max; ++t) plan.emplace_back(g, t);
  }
  return plan;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const std::vector<NamedGraph>& corpus,
                                          const ExperimentOptions& options) {
  const auto plan = row_plan(corpus, options);
  std::vector<ExperimentRow> rows(plan.size());
  const long count = static_cast<long>(plan.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    rows[i] = run_row(corpus[plan[i].first], plan[i].second, options);
  }
  return rows;
}

std::vector<ExperimentRow> run_experiment_serial(const std::vector<NamedGraph>& corpus,
                                                 const ExperimentOptions& options) {
  std::vector<ExperimentRow> rows;
  for (const auto& [g, t] : row_plan(corpus, options)) {
    rows.push_back(run_row(corpus[g], t, options));
  }
  return rows;
}

std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << kExperimentCsvHeader << '\n';
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const ExperimentRow& r : rows) {
    out << csv_field(r.graph) << ',' << r.n << ',' << r.edges << ',' << opt(r.dist_g) << ','
        << r.t << ',' << opt(r.dist_mu) << ',' << (r.dist_mu_exact ? "true" : "false") << ','
        << (r.construction_verified ? "true" : "false") << ','
        << (r.inequality_holds ? (*r.inequality_holds ? "true" : "false") : "unknown") << ','
        << csv_field(r.note) << '\n';
  }
  return out.str();
}

}  // namespace distinguish
