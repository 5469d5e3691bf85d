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

#include "distinguish/families.hpp"

#include <filesystem>
#include <sstream>

#include "distinguish/edge_list.hpp"
#include "distinguish/io.hpp"

namespace distinguish {

Graph star_graph(int m) {
  if (m < 0) throw std::invalid_argument("star needs m >= 0");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= m; ++i) edges.emplace_back(0, i);
  return Graph(m + 1, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

Graph asymmetric6() {
  return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {3, 5}});
}

namespace {

std::pair<int, int> parse_range(const std::string& token, int line_no) {
  try {
    size_t used = 0;
    const auto dots = token.find("..");
    if (dots == std::string::npos) {
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      return {v, v};
    }
    const int lo = std::stoi(token.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(token);
    const std::string rest = token.substr(dots + 2);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(token);
    if (hi < lo) throw ParseError(line_no, "empty range " + token);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError(line_no, "expected an integer or a..b range, got \"" + token + "\"");
  }
}

}  // namespace

std::vector<NamedGraph> parse_corpus(std::string_view text, const std::string& base_dir) {
  std::vector<NamedGraph> corpus;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind) || kind[0] == '#') continue;
    if (kind == "asym6") {
      corpus.push_back({"asym6", asymmetric6()});
      continue;
    }
    if (kind == "file") {
      std::string path;
      if (!(fields >> path)) throw ParseError(line_no, "file entry needs a path");
      std::string name;
      if (!(fields >> name)) name = std::filesystem::path(path).stem().string();
      std::filesystem::path full(path);
      if (full.is_relative()) full = std::filesystem::path(base_dir) / full;
      try {
        corpus.push_back({name, from_edge_list(read_file(full.string()))});
      } catch (const ParseError& e) {
        throw ParseError(line_no, full.string() + ": " + e.what());
      } catch (const std::runtime_error& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }
    std::string arg;
    if (!(fields >> arg)) throw ParseError(line_no, kind + " entry needs a size");
    const auto [lo, hi] = parse_range(arg, line_no);
    for (int v = lo; v <= hi; ++v) {
      try {
        if (kind == "star") {
          corpus.push_back({"K1_" + std::to_string(v), star_graph(v)});
        } else if (kind == "path") {
          corpus.push_back({"P" + std::to_string(v), path_graph(v)});
        } else if (kind == "cycle") {
          corpus.push_back({"C" + std::to_string(v), cycle_graph(v)});
        } else if (kind == "complete") {
          corpus.push_back({"K" + std::to_string(v), complete_graph(v)});
        } else {
          throw ParseError(line_no, "unknown family \"" + kind + "\"");
        }
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    }
  }
  return corpus;
}

}  // namespace distinguish
