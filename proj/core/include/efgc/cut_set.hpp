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

#include <vector>

#include "efgc/model.hpp"
#include "efgc/verdict.hpp"

namespace efgc {

// Decides whether an envy-free assignment exists in which every component of
// G - F goes wholly to one agent. The graph must be a tree or a cycle
// (GraphClassError otherwise). Honors the instance variant.
Verdict solve_with_cut_set(const Instance& instance, const std::vector<EdgeIndex>& cut);

// Cut sets of size at most |A| - 1. Tree, VDGC.
Verdict solve_tree_vdgc(const Instance& instance);

// Cut sets F plus all edges at U for |U| + |F| <= |A|. Tree, GC.
Verdict solve_tree_gc_bounded_degree(const Instance& instance);

// Cut sets of size at most |A|. Cycle, either variant.
Verdict solve_cycle(const Instance& instance);

}  // namespace efgc
