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

#include "efgc/model.hpp"
#include "efgc/verdict.hpp"

namespace efgc {

// Largest instance the oracle is meant for; beyond it a ScaleExceeded warning
// is attached to the verdict and the search still runs.
inline constexpr std::size_t kOracleMaxEdges = 4;
inline constexpr std::size_t kOracleMaxAgents = 4;

// Brute-force decision by explicit enumeration: every endpoint-owner map and
// every map of the remaining agents to the edge they sit inside, each checked
// with one LP over x0_e, delta_e, x1_e carrying all envy constraints.
Verdict solve_explicit_oracle(const Instance& instance);

}  // namespace efgc
