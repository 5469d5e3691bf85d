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

#ifndef DISTINGUISH_EDGE_LIST_HPP_
#define DISTINGUISH_EDGE_LIST_HPP_

#include <string>
#include <string_view>

#include "distinguish/graph.hpp"

namespace distinguish {

// Edge-list text format:
//   n m
//   u v      (m lines, 0-based ids, whitespace separated)
// Lines whose first non-blank character is '#' and blank lines are skipped.
// Duplicate edge lines collapse to a single edge. Throws ParseError.
Graph from_edge_list(std::string_view text);

// Writes the canonical form: header then edges in sorted order.
std::string to_edge_list(const Graph& g);

}  // namespace distinguish

#endif  // DISTINGUISH_EDGE_LIST_HPP_
