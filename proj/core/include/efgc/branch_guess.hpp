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

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "efgc/lp.hpp"
#include "efgc/model.hpp"

namespace efgc {

// Variables of the length LP: x0_e = 3e, delta_e = 3e + 1, x1_e = 3e + 2.
inline VariableId x_var(EdgeIndex e, int end) { return 3 * e + (end == 0 ? 0 : 2); }
inline VariableId delta_var(EdgeIndex e) { return 3 * e + 1; }

// Empty system declaring the 3|E| length variables in the order above.
LinearSystem length_variables(const Graph& graph);

struct BranchGuess {
  // endpoint_agent[2e + i]: agent holding the piece of e at coordinate i.
  std::vector<AgentIndex> endpoint_agent;
  // n_e: number of agents whose piece lies strictly inside e.
  std::vector<std::size_t> inside_count;
  // (e, f) -> agent inside e closest to envying the agents inside f.
  std::map<std::pair<EdgeIndex, EdgeIndex>, AgentIndex> pair_critical;
  // (e, a) -> agent inside e envying the endpoint agent a the most.
  std::map<std::pair<EdgeIndex, AgentIndex>, AgentIndex> vertex_critical;
  // Point over the length variables fixing the per-(e, a) envy orderings.
  Point sample_point;

  AgentIndex endpoint(EdgeIndex e, int end) const { return endpoint_agent.at(2 * e + (end == 0 ? 0 : 1)); }
  // A_V in ascending order.
  std::vector<AgentIndex> endpoint_agents(std::size_t agent_count) const;
  // Agents outside A_V, ascending.
  std::vector<AgentIndex> pool(std::size_t agent_count) const;
  bool in_endpoint_set(AgentIndex a) const;
};

struct LengthSolution {
  std::vector<Rational> x0;
  std::vector<Rational> delta;
  std::vector<Rational> x1;

  static LengthSolution from_point(const Point& point, std::size_t edge_count);
};

// Sum over the endpoint pieces of `holder` of u_viewer(f) * x^i_f: the value
// `viewer` assigns to the piece of the endpoint agent `holder`.
LinearForm held_value_form(const Instance& instance, const BranchGuess& guess, AgentIndex holder,
                           AgentIndex viewer);

// Edge ratio u(e)/u(f), with u(f) = 0 read as infinity. True iff the ratio
// of agent b is at least that of agent c.
bool edge_ratio_ge(const Instance& instance, AgentIndex b, AgentIndex c, EdgeIndex e, EdgeIndex f);

// Envy ratio S/u: S = 0 reads as 0, otherwise u = 0 reads as infinity.
// True iff S1/u1 <= S2/u2.
bool envy_ratio_le(const Rational& s1, const Rational& u1, const Rational& s2, const Rational& u2);

}  // namespace efgc
