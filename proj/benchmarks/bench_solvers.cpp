// Copyright 2026 The efgc Authors.
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

#include <benchmark/benchmark.h>

#include "efgc/cut_set.hpp"
#include "efgc/few_edges.hpp"
#include "efgc/generators.hpp"
#include "efgc/io.hpp"
#include "efgc/oracle.hpp"

namespace {

using namespace efgc;

const char* kStar = R"(efgc-instance v1
variant gc
vertices c l1 l2 l3
edge e1 c l1
edge e2 c l2
edge e3 c l3
agent a1 e1=1 e2=1 e3=1
agent a2 e1=1 e2=1 e3=1
)";

const char* kTriangle = R"(efgc-instance v1
variant vdgc
vertices v1 v2 v3
edge e1 v1 v2
edge e2 v2 v3
edge e3 v3 v1
agent a1 e1=3 e2=1 e3=0
agent a2 e1=1 e2=2 e3=2
agent a3 e1=0 e2=1 e3=4
)";

void BM_FewEdgesStar(benchmark::State& state) {
  const Instance inst = parse_instance(kStar);
  for (auto _ : state) benchmark::DoNotOptimize(solve_few_edges(inst));
}
BENCHMARK(BM_FewEdgesStar)->Unit(benchmark::kMillisecond);

void BM_FewEdgesTriangle(benchmark::State& state) {
  const Instance inst = parse_instance(kTriangle);
  for (auto _ : state) benchmark::DoNotOptimize(solve_few_edges(inst));
}
BENCHMARK(BM_FewEdgesTriangle)->Unit(benchmark::kMillisecond);

void BM_OracleTriangle(benchmark::State& state) {
  const Instance inst = parse_instance(kTriangle);
  for (auto _ : state) benchmark::DoNotOptimize(solve_explicit_oracle(inst));
}
BENCHMARK(BM_OracleTriangle)->Unit(benchmark::kMillisecond);

void BM_CycleTriangle(benchmark::State& state) {
  const Instance inst = parse_instance(kTriangle);
  for (auto _ : state) benchmark::DoNotOptimize(solve_cycle(inst));
}
BENCHMARK(BM_CycleTriangle)->Unit(benchmark::kMillisecond);

// Star from a number-partitioning input with `range(0)` leaves.
void BM_TreeGcStar(benchmark::State& state) {
  NumPartInput values;
  for (long i = 0; i < state.range(0); ++i) values.push_back(static_cast<std::uint64_t>(i % 3 + 1));
  const Instance inst = gen_star_from_numpart(values);
  for (auto _ : state) benchmark::DoNotOptimize(solve_tree_gc_bounded_degree(inst));
}
BENCHMARK(BM_TreeGcStar)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace
