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

#include "efgc/dispatch.hpp"

#include <array>
#include <utility>

#include "efgc/cut_set.hpp"
#include "efgc/few_edges.hpp"
#include "efgc/oracle.hpp"

namespace efgc {
namespace {

constexpr std::array<std::pair<SolverMode, std::string_view>, 6> kModes{{
    {SolverMode::Auto, "auto"},
    {SolverMode::FewEdges, "few-edges"},
    {SolverMode::TreeVdgc, "tree-vdgc"},
    {SolverMode::TreeGc, "tree-gc"},
    {SolverMode::Cycle, "cycle"},
    {SolverMode::Oracle, "oracle"},
}};

}  // namespace

std::optional<SolverMode> parse_mode(std::string_view name) {
  for (const auto& [mode, n] : kModes) {
    if (n == name) return mode;
  }
  return std::nullopt;
}

std::string_view mode_name(SolverMode mode) {
  for (const auto& [m, n] : kModes) {
    if (m == mode) return n;
  }
  return "unknown";
}

SolverMode resolve_mode(const Instance& instance, SolverMode mode) {
  if (mode != SolverMode::Auto) return mode;
  if (instance.graph.is_tree()) {
    return instance.variant == Variant::VDGC ? SolverMode::TreeVdgc : SolverMode::TreeGc;
  }
  if (instance.graph.is_cycle()) return SolverMode::Cycle;
  return SolverMode::FewEdges;
}

Verdict solve(const Instance& instance, SolverMode mode) {
  switch (resolve_mode(instance, mode)) {
    case SolverMode::TreeVdgc: return solve_tree_vdgc(instance);
    case SolverMode::TreeGc: return solve_tree_gc_bounded_degree(instance);
    case SolverMode::Cycle: return solve_cycle(instance);
    case SolverMode::Oracle: return solve_explicit_oracle(instance);
    case SolverMode::Auto:
    case SolverMode::FewEdges: break;
  }
  return solve_few_edges(instance);
}

}  // namespace efgc
