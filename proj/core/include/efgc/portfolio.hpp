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

#include <map>
#include <utility>
#include <vector>

#include "efgc/arrangement.hpp"
#include "efgc/branch_guess.hpp"

namespace efgc {

// Forms whose signs fix, for every edge e with n_e > 0 and endpoint agent a,
// how the agents outside A_V rank by envy ratio S^a_b / u_b(e). One form
// u_{b2}(e) S^a_{b1} - u_{b1}(e) S^a_{b2} per pair b1 < b2, plus S^a_b itself
// for agents with u_b(e) = 0. Identically zero forms are dropped.
std::vector<LinearForm> build_ordering_forms(const Instance& instance, const BranchGuess& guess);

// Tie classes, most envious first.
using WeakOrder = std::vector<std::vector<AgentIndex>>;

// The ranking of the agents outside A_V at the witness point for every
// (e, a) covered by build_ordering_forms.
std::map<std::pair<EdgeIndex, AgentIndex>, WeakOrder> portfolio_from_witness(
    const Instance& instance, const BranchGuess& guess, const CellWitness& witness);

}  // namespace efgc
