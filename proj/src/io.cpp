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

#include "distinguish/io.hpp"

#include <fstream>
#include <sstream>

#include "distinguish/edge_list.hpp"
#include "json.hpp"

namespace distinguish {

std::string roles_to_text(const LabeledGraph& lg) {
  std::ostringstream out;
  out << "# roles t=" << lg.t << " base_n=" << lg.base_n << '\n';
  for (size_t v = 0; v < lg.roles.size(); ++v) {
    const VertexRole& r = lg.roles[v];
    if (r.is_root) {
      out << v << " root\n";
    } else {
      out << v << " level " << r.level << ' ' << r.original << '\n';
    }
  }
  return out.str();
}

LabeledGraph labeled_from_text(std::string_view edge_list, std::string_view roles) {
  LabeledGraph lg;
  lg.graph = from_edge_list(edge_list);
  lg.roles.assign(lg.graph.num_vertices(), VertexRole{});
  std::vector<bool> seen(lg.graph.num_vertices(), false);
  std::istringstream in{std::string(roles)};
  std::string line;
  int line_no = 0;
  int max_level = 0;
  int roots = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream fields(line);
    long long id = -1;
    std::string kind;
    if (!(fields >> id >> kind)) throw ParseError(line_no, "expected \"<id> level|root\"");
    if (id < 0 || id >= lg.graph.num_vertices()) {
      throw ParseError(line_no, "vertex id out of range");
    }
    if (seen[id]) throw ParseError(line_no, "vertex " + std::to_string(id) + " listed twice");
    seen[id] = true;
    if (kind == "root") {
      lg.roles[id] = VertexRole::Root();
      ++roots;
    } else if (kind == "level") {
      int j = -1;
      long long i = -1;
      if (!(fields >> j >> i) || j < 0 || i < 0) {
        throw ParseError(line_no, "expected \"<id> level <j> <i>\"");
      }
      lg.roles[id] = VertexRole::Level(j, static_cast<Vertex>(i));
      max_level = std::max(max_level, j);
    } else {
      throw ParseError(line_no, "unknown role \"" + kind + "\"");
    }
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "trailing text \"" + extra + "\"");
  }
  for (size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw ParseError(line_no + 1, "vertex " + std::to_string(v) + " has no role");
  }
  if (roots != 1) throw ParseError(line_no + 1, "expected exactly one root");
  lg.t = max_level;
  if (lg.t < 1 || (lg.graph.num_vertices() - 1) % (lg.t + 1) != 0) {
    throw std::invalid_argument("role levels do not form a Mycielskian layout");
  }
  lg.base_n = (lg.graph.num_vertices() - 1) / (lg.t + 1);
  for (Vertex v = 0; v < lg.graph.num_vertices(); ++v) {
    const VertexRole& r = lg.roles[v];
    const bool ok = r.is_root ? v == lg.root()
                              : r.original < lg.base_n && v == lg.at(r.level, r.original);
    if (!ok) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is not in canonical Mycielskian numbering");
    }
  }
  return lg;
}

std::string coloring_to_json(const EdgeColoring& c) {
  nlohmann::ordered_json doc;
  doc["n"] = c.num_vertices();
  doc["num_colors"] = c.num_colors();
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (size_t i = 0; i < c.edges().size(); ++i) {
    nlohmann::ordered_json rec;
    rec["u"] = c.edges()[i].u;
    rec["v"] = c.edges()[i].v;
    rec["color"] = c.colors()[i];
    edges.push_back(std::move(rec));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(1) + "\n";
}

EdgeColoring coloring_from_json(const Graph& g, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    if (n != g.num_vertices()) {
      throw ParseError(0, "coloring is for " + std::to_string(n) +
                              " vertices, graph has " + std::to_string(g.num_vertices()));
    }
    std::vector<int> colors(g.num_edges(), 0);
    for (const auto& rec : doc.at("edges")) {
      const Vertex u = rec.at("u").get<int>();
      const Vertex v = rec.at("v").get<int>();
      const int color = rec.at("color").get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(0, "edge endpoint out of range");
      auto idx = g.edge_index(u, v);
      if (!idx) {
        throw ParseError(0, "{" + std::to_string(u) + "," + std::to_string(v) +
                                "} is not an edge of the graph");
      }
      if (colors[*idx] != 0) throw ParseError(0, "edge colored twice");
      if (color < 1) throw ParseError(0, "colors must be positive");
      colors[*idx] = color;
    }
    for (int c : colors) {
      if (c == 0) throw ParseError(0, "coloring does not cover every edge");
    }
    int num_colors = doc.contains("num_colors") ? doc.at("num_colors").get<int>() : 0;
    for (int c : colors) num_colors = std::max(num_colors, c);
    return EdgeColoring(g, std::move(colors), num_colors);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed coloring: ") + e.what());
  }
}

std::string_view dot_color_name(int color) {
  if (color < 1) return "gray";
  return kDotPalette[(color - 1) % kDotPalette.size()];
}

std::string to_dot(const Graph& g, const EdgeColoring* coloring, const LabeledGraph* roles) {
  if (coloring && !coloring->fits(g)) throw std::invalid_argument("coloring does not fit graph");
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle, width=0.3, fixedsize=true, fontsize=9];\n";
  out << "  edge [penwidth=2];\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v;
    if (roles) {
      const VertexRole& r = roles->roles[v];
      if (r.is_root) {
        out << " [label=\"w\"]";
      } else {
        out << " [label=\"" << r.original << "^" << r.level << "\"]";
      }
    }
    out << ";\n";
  }
  if (roles) {
    for (int j = 0; j <= roles->t; ++j) {
      out << "  { rank=same;";
      for (Vertex i = 0; i < roles->base_n; ++i) out << ' ' << roles->at(j, i) << ';';
      out << " }\n";
    }
  }
  for (int idx = 0; idx < g.num_edges(); ++idx) {
    const Edge& e = g.edges()[idx];
    out << "  " << e.u << " -- " << e.v;
    if (coloring) {
      const int c = coloring->colors()[idx];
      out << " [color=\"" << dot_color_name(c) << "\", label=\"" << c << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string permutation_to_text(const Permutation& p) {
  std::ostringstream out;
  for (int v = 0; v < p.size(); ++v) {
    if (v) out << ' ';
    out << p.images[v];
  }
  return out.str();
}

Permutation permutation_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  Permutation p;
  long long x = 0;
  while (in >> x) p.images.push_back(static_cast<Vertex>(x));
  if (!in.eof()) throw ParseError(1, "permutation images must be integers");
  if (!p.is_bijection()) throw ParseError(1, "images do not form a permutation");
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace distinguish
