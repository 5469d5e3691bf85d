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

#include "cli.hpp"

#include <charconv>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "distinguish/edge_list.hpp"
#include "distinguish/experiment.hpp"
#include "distinguish/families.hpp"
#include "distinguish/io.hpp"
#include "distinguish/mycielski.hpp"
#include "distinguish/solver.hpp"

namespace distinguish::cli {
namespace {

struct Settings {
  std::string input;
  std::string coloring;
  std::string roles;
  std::string out;
  std::string kind;
  std::string t_range = "1";
  int t = 1;
  int p = 1;
  int m = 0;
  int max_colors = SolverOptions{}.max_colors;
  std::uint64_t budget_nodes = 10'000'000;
  bool override_star = false;
};

// Errors raised inside a subcommand, mapped to an exit code by run_cli.
struct CliFailure : std::runtime_error {
  CliFailure(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

Graph load_graph(const std::string& path) {
  try {
    return from_edge_list(read_file(path));
  } catch (const ParseError& e) {
    throw CliFailure(kParseError, path + ": " + e.what());
  }
}

EdgeColoring load_coloring(const Graph& g, const std::string& path) {
  try {
    return coloring_from_json(g, read_file(path));
  } catch (const ParseError& e) {
    throw CliFailure(kParseError, path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CliFailure(kParseError, path + ": " + e.what());
  }
}

SolverOptions solver_options(const Settings& s) {
  SolverOptions options;
  options.max_colors = s.max_colors;
  return options;
}

SearchBudget node_budget(const Settings& s) { return {s.budget_nodes, std::nullopt}; }

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

int cmd_build(const Settings& s, std::ostream& out) {
  const Graph g = load_graph(s.input);
  LabeledGraph lg = [&] {
    try {
      return iterated(g, s.t, s.p);
    } catch (const std::length_error& e) {
      throw CliFailure(kParseError, e.what());
    } catch (const std::invalid_argument& e) {
      throw CliFailure(kParseError, e.what());
    }
  }();
  if (s.out.empty()) {
    out << to_edge_list(lg.graph);
    return kOk;
  }
  write_file(s.out, to_edge_list(lg.graph));
  write_file(s.out + ".roles", roles_to_text(lg));
  out << "wrote " << s.out << " (" << lg.graph.num_vertices() << " vertices, "
      << lg.graph.num_edges() << " edges) and " << s.out << ".roles\n";
  return kOk;
}

int cmd_index(const Settings& s, std::ostream& out) {
  const Graph g = load_graph(s.input);
  IndexResult result = distinguishing_index(g, node_budget(s), solver_options(s));
  out << "index " << result.index << '\n';
  const std::string json = coloring_to_json(result.witness);
  if (s.out.empty()) {
    out << "witness\n" << json;
  } else {
    write_file(s.out, json);
    out << "witness " << s.out << '\n';
  }
  for (const NonexistenceCertificate& c : result.certificates) {
    out << "k=" << c.colors << ": exhausted " << c.nodes << " nodes\n";
  }
  return kOk;
}

void write_colored(const ColoredMycielskian& cm, const std::string& prefix, std::ostream& out) {
  const std::string json = coloring_to_json(cm.coloring);
  if (prefix.empty()) {
    out << json;
    return;
  }
  write_file(prefix + ".edges", to_edge_list(cm.graph.graph));
  write_file(prefix + ".roles", roles_to_text(cm.graph));
  write_file(prefix + ".json", json);
  write_file(prefix + ".dot", to_dot(cm.graph.graph, &cm.coloring, &cm.graph));
  out << "wrote " << prefix << ".{edges,roles,json,dot} (" << cm.graph.graph.num_edges()
      << " edges, " << cm.coloring.distinct_colors() << " colors)\n";
}

int cmd_color(const Settings& s, std::ostream& out) {
  try {
    if (s.kind == "star-mu") {
      write_colored(star_mu_coloring(s.m), s.out, out);
    } else if (s.kind == "star-mut") {
      write_colored(star_mut_coloring(s.m, s.t), s.out, out);
    } else {
      const Graph g = load_graph(s.input);
      EdgeColoring base = s.coloring.empty()
                              ? distinguishing_index(g, node_budget(s), solver_options(s)).witness
                              : load_coloring(g, s.coloring);
      write_colored(mimic_mut_coloring(g, base, s.t, s.override_star), s.out, out);
    }
  } catch (const PreconditionError& e) {
    throw CliFailure(kParseError, std::string("refused: ") + e.what());
  }
  return kOk;
}

int cmd_verify(const Settings& s, std::ostream& out) {
  const Graph g = load_graph(s.input);
  const EdgeColoring c = load_coloring(g, s.coloring);
  auto witness = find_nontrivial_color_preserving(g, c, node_budget(s));
  if (!witness) {
    out << "distinguishing\n";
    return kOk;
  }
  out << "NOT distinguishing: witness " << permutation_to_text(*witness) << '\n';
  return kVerifiedFalse;
}

std::pair<int, int> parse_t_range(const std::string& text) {
  auto parse_int = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || value < 1) {
      throw CliFailure(kParseError, "bad t range \"" + text + "\"");
    }
    return value;
  };
  const std::string_view view(text);
  const auto dots = view.find("..");
  if (dots == std::string_view::npos) {
    const int t = parse_int(view);
    return {t, t};
  }
  const int lo = parse_int(view.substr(0, dots));
  const int hi = parse_int(view.substr(dots + 2));
  if (lo > hi) throw CliFailure(kParseError, "empty t range \"" + text + "\"");
  return {lo, hi};
}

int cmd_experiment(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto [lo, hi] = parse_t_range(s.t_range);
  std::vector<NamedGraph> corpus;
  try {
    const std::filesystem::path path(s.input);
    corpus = parse_corpus(read_file(s.input), path.parent_path().string());
  } catch (const ParseError& e) {
    throw CliFailure(kParseError, s.input + ": " + e.what());
  }
  ExperimentOptions options;
  options.t_min = lo;
  options.t_max = hi;
  options.budget = node_budget(s);
  options.solver = solver_options(s);
  const auto rows = run_experiment(corpus, options);
  write_or_print(s.out, rows_to_csv(rows), out);

  int code = kOk;
  for (const ExperimentRow& row : rows) {
    if (row.inequality_holds && !*row.inequality_holds) {
      err << row.graph << " t=" << row.t << ": inequality fails\n";
      code = kVerifiedFalse;
    } else if (!row.inequality_holds) {
      err << row.graph << " t=" << row.t << ": undecided (" << row.note << ")\n";
      if (code == kOk) code = kInconclusive;
    }
  }
  if (!s.out.empty()) out << "wrote " << rows.size() << " rows to " << s.out << '\n';
  return code;
}

int cmd_export_dot(const Settings& s, std::ostream& out) {
  const Graph g = load_graph(s.input);
  std::optional<EdgeColoring> coloring;
  if (!s.coloring.empty()) coloring = load_coloring(g, s.coloring);
  std::optional<LabeledGraph> labeled;
  if (!s.roles.empty()) {
    try {
      labeled = labeled_from_text(read_file(s.input), read_file(s.roles));
    } catch (const ParseError& e) {
      throw CliFailure(kParseError, s.roles + ": " + e.what());
    }
  }
  write_or_print(s.out, to_dot(g, coloring ? &*coloring : nullptr, labeled ? &*labeled : nullptr),
                 out);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Distinguishing edge colorings of generalized Mycielski graphs", "distinguish"};
  app.require_subcommand(1);

  auto budget_flag = [&](CLI::App* cmd) {
    cmd->add_option("--budget-nodes", s.budget_nodes, "search node budget")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* build = app.add_subcommand("build", "write mu_t^p(G) as an edge list");
  build->add_option("input", s.input, "edge-list file")->required();
  build->add_option("--t", s.t, "shadow levels")->check(CLI::PositiveNumber);
  build->add_option("--p", s.p, "iterations")->check(CLI::PositiveNumber);
  build->add_option("--out", s.out, "output edge list (roles go to <out>.roles)");

  CLI::App* index = app.add_subcommand("index", "compute the distinguishing index");
  index->add_option("input", s.input, "edge-list file")->required();
  index->add_option("--max-colors", s.max_colors)->check(CLI::PositiveNumber);
  budget_flag(index);
  index->add_option("--out", s.out, "witness coloring (JSON)");

  CLI::App* color = app.add_subcommand("color", "build a constructive coloring");
  color->add_option("kind", s.kind)
      ->required()
      ->check(CLI::IsMember({"star-mu", "star-mut", "mimic"}));
  color->add_option("--m", s.m, "star size for star-mu and star-mut");
  color->add_option("--t", s.t)->check(CLI::PositiveNumber);
  color->add_option("--graph", s.input, "base graph for mimic");
  color->add_option("--coloring", s.coloring, "base coloring for mimic (default: solver)");
  color->add_flag("--override-star", s.override_star, "allow mimic on a star");
  color->add_option("--max-colors", s.max_colors)->check(CLI::PositiveNumber);
  budget_flag(color);
  color->add_option("--out", s.out, "output prefix");

  CLI::App* verify = app.add_subcommand("verify", "check that a coloring is distinguishing");
  verify->add_option("graph", s.input)->required();
  verify->add_option("coloring", s.coloring)->required();
  budget_flag(verify);

  CLI::App* experiment = app.add_subcommand("experiment", "run the inequality experiment");
  experiment->add_option("corpus", s.input)->required();
  experiment->add_option("--t", s.t_range, "t or a..b");
  experiment->add_option("--max-colors", s.max_colors)->check(CLI::PositiveNumber);
  budget_flag(experiment);
  experiment->add_option("--out", s.out, "CSV output");

  CLI::App* dot = app.add_subcommand("export-dot", "write Graphviz DOT");
  dot->add_option("graph", s.input)->required();
  dot->add_option("--coloring", s.coloring);
  dot->add_option("--roles", s.roles);
  dot->add_option("--out", s.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (build->parsed()) return cmd_build(s, out);
    if (index->parsed()) return cmd_index(s, out);
    if (color->parsed()) {
      if (s.kind != "mimic" && s.m < 1) throw CliFailure(kParseError, "--m is required");
      if (s.kind == "mimic" && s.input.empty()) {
        throw CliFailure(kParseError, "--graph is required for mimic");
      }
      return cmd_color(s, out);
    }
    if (verify->parsed()) return cmd_verify(s, out);
    if (experiment->parsed()) return cmd_experiment(s, out, err);
    if (dot->parsed()) return cmd_export_dot(s, out);
  } catch (const CliFailure& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  } catch (const UndefinedIndex& e) {
    out << e.what() << '\n';
    return kUndefinedIndex;
  } catch (const SearchTruncated& e) {
    out << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const OutsideEnvelope& e) {
    out << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace distinguish::cli
