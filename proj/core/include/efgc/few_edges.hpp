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

#include "efgc/branch_guess.hpp"
#include "efgc/verdict.hpp"

namespace efgc {

// Sanity checks on endpoint guesses and inside counts: counts add up to |A|,
// each endpoint agent's guesses are joined through edges it holds whole, and
// for VDGC every vertex has a single owner.
bool passes_sanity_checks(const Instance& instance, const BranchGuess& guess);

// Every endpoint map and count vector passing the sanity checks, ordered
// lexicographically by (endpoint map, counts).
std::vector<BranchGuess> enumerate_initial_branches(const Instance& instance);

// Nonnegativity, per-edge sums and the envy constraints of endpoint agents.
LinearSystem build_base_lp(const Instance& instance, const BranchGuess& guess);

// build_base_lp plus the constraints of the guessed critical agents. Envy
// constraints towards an endpoint agent a on edge e are emitted for every
// agent outside A_V that envies a at most as much as vertex_critical[e, a] at
// the sample point.
LinearSystem build_lp(const Instance& instance, const BranchGuess& guess);

struct Extraction {
  // Endpoint agents and pinned critical agents hold their pieces; the pieces
  // of all other agents are empty.
  Assignment partial;
  // Inside slots not taken by a pinned agent.
  std::vector<Piece> leftover;
  std::vector<AgentIndex> unassigned;
  // Critical agents, each pinned to the leftmost free slot of its edge.
  std::vector<AgentIndex> pinned;
  // Every piece of the tiling: endpoint agents' pieces, then all slots.
  std::vector<Piece> full_partition;
};

// Throws InconsistentLengths if the lengths are negative or do not fill an
// edge.
Extraction extract_assignment(const Instance& instance, const BranchGuess& guess,
                              const LengthSolution& lengths);

Verdict solve_few_edges(const Instance& instance);

}  // namespace efgc
