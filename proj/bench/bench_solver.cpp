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

// Serial reference solver against the OpenMP one on the same searches.
// Pruning is switched off in the "bare" variants so the trees are large
// enough for the split to matter.

#include <benchmark/benchmark.h>

#include "distinguish/families.hpp"
#include "distinguish/mycielski.hpp"
#include "distinguish/solver.hpp"

namespace {

using namespace distinguish;

struct Case {
  Graph graph;
  int k;
  bool bare;
};

Case make_case(int id) {
  switch (id) {
    case 0:  // 2-color nonexistence on mu(K_{1,4})
      return {mycielskian(star_graph(4)).graph, 2, false};
    case 1:  // 3-color witness on mu(K_{1,5})
      return {mycielskian(star_graph(5)).graph, 3, false};
    case 2:  // the same nonexistence as case 0 without pruning
      return {mycielskian(star_graph(4)).graph, 2, true};
    default:  // unpruned 2-color nonexistence on K_4
      return {complete_graph(4), 2, true};
  }
}

SolverOptions options_for(const Case& c) {
  SolverOptions options;
  options.early_accept = !c.bare;
  options.early_reject = !c.bare;
  return options;
}

void BM_Serial(benchmark::State& state) {
  const Case c = make_case(static_cast<int>(state.range(0)));
  const SolverOptions options = options_for(c);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    Existence e = exists_distinguishing_serial(c.graph, c.k, {100'000'000, std::nullopt}, options);
    nodes = e.nodes;
    benchmark::DoNotOptimize(e);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_Parallel(benchmark::State& state) {
  const Case c = make_case(static_cast<int>(state.range(0)));
  const SolverOptions options = options_for(c);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    Existence e = exists_distinguishing(c.graph, c.k, {100'000'000, std::nullopt}, options);
    nodes = e.nodes;
    benchmark::DoNotOptimize(e);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

BENCHMARK(BM_Serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
