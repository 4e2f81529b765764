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

#include "efgc/branch_guess.hpp"

#include <algorithm>

namespace efgc {

LinearSystem length_variables(const Graph& graph) {
  LinearSystem s;
  for (const auto& e : graph.edges()) {
    s.add_variable("x0_" + e.id);
    s.add_variable("delta_" + e.id);
    s.add_variable("x1_" + e.id);
  }
  return s;
}

std::vector<AgentIndex> BranchGuess::endpoint_agents(std::size_t agent_count) const {
  std::vector<bool> in(agent_count, false);
  for (AgentIndex a : endpoint_agent) in.at(a) = true;
  std::vector<AgentIndex> out;
  for (AgentIndex a = 0; a < agent_count; ++a) {
    if (in[a]) out.push_back(a);
  }
  return out;
}

std::vector<AgentIndex> BranchGuess::pool(std::size_t agent_count) const {
  std::vector<AgentIndex> out;
  for (AgentIndex a = 0; a < agent_count; ++a) {
    if (!in_endpoint_set(a)) out.push_back(a);
  }
  return out;
}

bool BranchGuess::in_endpoint_set(AgentIndex a) const {
  return std::find(endpoint_agent.begin(), endpoint_agent.end(), a) != endpoint_agent.end();
}

LengthSolution LengthSolution::from_point(const Point& point, std::size_t edge_count) {
  LengthSolution s;
  for (EdgeIndex e = 0; e < edge_count; ++e) {
    s.x0.push_back(point.at(x_var(e, 0)));
    s.delta.push_back(point.at(delta_var(e)));
    s.x1.push_back(point.at(x_var(e, 1)));
  }
  return s;
}

LinearForm held_value_form(const Instance& instance, const BranchGuess& guess, AgentIndex holder,
                           AgentIndex viewer) {
  LinearForm f;
  for (EdgeIndex e = 0; e < instance.edge_count(); ++e) {
    for (int end = 0; end < 2; ++end) {
      if (guess.endpoint(e, end) == holder) f.add_term(x_var(e, end), instance.utility(viewer, e));
    }
  }
  return f;
}

bool edge_ratio_ge(const Instance& instance, AgentIndex b, AgentIndex c, EdgeIndex e, EdgeIndex f) {
  const Rational& bf = instance.utility(b, f);
  const Rational& cf = instance.utility(c, f);
  if (cf == 0) return bf == 0;
  if (bf == 0) return true;
  return instance.utility(b, e) * cf >= instance.utility(c, e) * bf;
}

bool envy_ratio_le(const Rational& s1, const Rational& u1, const Rational& s2, const Rational& u2) {
  if (s1 == 0) return true;
  if (u1 == 0) return u2 == 0 && s2 != 0;
  if (s2 == 0) return false;
  if (u2 == 0) return true;
  return s1 * u2 <= s2 * u1;
}

}  // namespace efgc
