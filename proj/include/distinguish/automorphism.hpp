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

#ifndef DISTINGUISH_AUTOMORPHISM_HPP_
#define DISTINGUISH_AUTOMORPHISM_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "distinguish/edge_coloring.hpp"
#include "distinguish/graph.hpp"
#include "distinguish/mycielski.hpp"

namespace distinguish {

// A bijection on 0..n-1, stored as its image array.
struct Permutation {
  std::vector<Vertex> images;

  static Permutation Identity(int n);

  int size() const { return static_cast<int>(images.size()); }
  Vertex operator()(Vertex v) const { return images[v]; }
  bool is_identity() const;
  bool is_bijection() const;

  // (a * b)(v) = a(b(v)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  auto operator<=>(const Permutation&) const = default;
};

struct SearchBudget {
  std::uint64_t node_limit = 1'000'000;
  // Stop after emitting this many results; unset means all.
  std::optional<std::uint64_t> found_limit;
};

// The search ran out of nodes before it could give a definite answer.
class SearchTruncated : public std::runtime_error {
 public:
  SearchTruncated(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

// Throws std::invalid_argument when p.size() != g.num_vertices().
bool is_automorphism(const Graph& g, const Permutation& p);

// p is an automorphism of g and labels[e] == labels[p(e)] for every edge e.
// labels is indexed like g.edges().
bool preserves_edge_labels(const Graph& g, std::span<const int> labels,
                           const Permutation& p);

bool preserves_coloring(const Graph& g, const EdgeColoring& c, const Permutation& p);

// All automorphisms of g (first found_limit when set), identity included.
// Individualization-refinement backtracking: the initial cells come from
// distance profiles, then equitable refinement. Throws SearchTruncated.
std::vector<Permutation> enumerate_automorphisms(const Graph& g,
                                                 const SearchBudget& budget = {},
                                                 SearchStats* stats = nullptr);

// As above, restricted to automorphisms preserving integer edge labels.
std::vector<Permutation> enumerate_label_preserving(const Graph& g,
                                                    std::span<const int> labels,
                                                    const SearchBudget& budget = {},
                                                    SearchStats* stats = nullptr);

// A non-identity automorphism preserving the edge labels, or nullopt when the
// search space was exhausted without finding one. Throws SearchTruncated.
std::optional<Permutation> find_nontrivial_label_preserving(
    const Graph& g, std::span<const int> labels, const SearchBudget& budget = {},
    SearchStats* stats = nullptr);

std::optional<Permutation> find_nontrivial_color_preserving(
    const Graph& g, const EdgeColoring& coloring, const SearchBudget& budget = {},
    SearchStats* stats = nullptr);

// Partial colorings: label 0 marks an uncolored ("wild") edge that is
// compatible with any color. Finds a non-identity automorphism p such that
// for every edge e, labels[e] and labels[p(e)] are equal or one is wild.
// nullopt proves that no completion of the partial coloring admits a
// non-trivial color-preserving automorphism. Throws SearchTruncated.
std::optional<Permutation> find_nontrivial_wild_compatible(
    const Graph& g, std::span<const int> labels, const SearchBudget& budget = {},
    SearchStats* stats = nullptr);

struct RootReport {
  LabeledGraph mycielskian;
  std::optional<StarShape> star;
  std::uint64_t group_order = 0;
  // Sorted images of the root over the whole automorphism group.
  std::vector<Vertex> root_images;
  // Top-level shadow of the star center (only for stars).
  std::optional<Vertex> center_shadow;
  bool root_fixed = false;
  // Non-stars: images == {w}. Stars with m >= 2: images within {w, u_0^t}.
  // Unset for K_1 and K_2, where no claim is made.
  std::optional<bool> matches_expected;
};

// Builds mu_t(g) and records where its automorphisms send the root.
RootReport verify_root_behavior(const Graph& g, int t,
                                const SearchBudget& budget = {});

}  // namespace distinguish

#endif  // DISTINGUISH_AUTOMORPHISM_HPP_
