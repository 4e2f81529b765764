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

#include "efgc/portfolio.hpp"

#include <algorithm>

namespace efgc {

std::vector<LinearForm> build_ordering_forms(const Instance& instance, const BranchGuess& guess) {
  const std::size_t m = instance.agent_count();
  const auto holders = guess.endpoint_agents(m);
  const auto pool = guess.pool(m);
  std::vector<LinearForm> forms;
  for (EdgeIndex e = 0; e < instance.edge_count(); ++e) {
    if (guess.inside_count.at(e) == 0) continue;
    for (AgentIndex a : holders) {
      std::vector<LinearForm> held;
      for (AgentIndex b : pool) held.push_back(held_value_form(instance, guess, a, b));
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (instance.utility(pool[i], e) == 0 && !held[i].is_zero()) forms.push_back(held[i]);
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
          LinearForm f = held[i] * instance.utility(pool[j], e) - held[j] * instance.utility(pool[i], e);
          if (!f.is_zero()) forms.push_back(std::move(f));
        }
      }
    }
  }
  return forms;
}

std::map<std::pair<EdgeIndex, AgentIndex>, WeakOrder> portfolio_from_witness(
    const Instance& instance, const BranchGuess& guess, const CellWitness& witness) {
  const std::size_t m = instance.agent_count();
  const auto pool = guess.pool(m);
  std::map<std::pair<EdgeIndex, AgentIndex>, WeakOrder> out;
  for (EdgeIndex e = 0; e < instance.edge_count(); ++e) {
    if (guess.inside_count.at(e) == 0) continue;
    for (AgentIndex a : guess.endpoint_agents(m)) {
      std::vector<std::pair<Rational, AgentIndex>> held;
      for (AgentIndex b : pool) held.emplace_back(held_value_form(instance, guess, a, b).evaluate(witness.point), b);
      auto more_envious = [&](const std::pair<Rational, AgentIndex>& x, const std::pair<Rational, AgentIndex>& y) {
        return !envy_ratio_le(x.first, instance.utility(x.second, e), y.first, instance.utility(y.second, e));
      };
      std::stable_sort(held.begin(), held.end(), more_envious);
      WeakOrder order;
      for (std::size_t i = 0; i < held.size(); ++i) {
        if (i == 0 || more_envious(held[i - 1], held[i])) order.emplace_back();
        order.back().push_back(held[i].second);
      }
      out[{e, a}] = std::move(order);
    }
  }
  return out;
}

}  // namespace efgc
