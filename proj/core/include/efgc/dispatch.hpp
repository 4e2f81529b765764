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

#pragma once

#include <optional>
#include <string_view>

#include "efgc/model.hpp"
#include "efgc/verdict.hpp"

namespace efgc {

enum class SolverMode { Auto, FewEdges, TreeVdgc, TreeGc, Cycle, Oracle };

std::optional<SolverMode> parse_mode(std::string_view name);
std::string_view mode_name(SolverMode mode);

// Auto becomes tree-vdgc or tree-gc on trees, cycle on cycles and few-edges
// otherwise; other modes are returned unchanged.
SolverMode resolve_mode(const Instance& instance, SolverMode mode);

Verdict solve(const Instance& instance, SolverMode mode = SolverMode::Auto);

}  // namespace efgc
