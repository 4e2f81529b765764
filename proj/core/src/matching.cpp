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

#include "efgc/matching.hpp"

#include <functional>

namespace efgc {

std::size_t Bigraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& adj : adjacency) n += adj.size();
  return n;
}

Bigraph compatibility_graph(const Instance& instance, const std::vector<Piece>& full_partition,
                            const std::vector<AgentIndex>& unassigned,
                            const std::vector<Piece>& leftover) {
  Bigraph g;
  g.left = unassigned;
  g.adjacency.resize(unassigned.size());
  for (std::size_t p = 0; p < leftover.size(); ++p) g.right.push_back(p);
  for (std::size_t i = 0; i < unassigned.size(); ++i) {
    const AgentIndex a = unassigned[i];
    Rational best = 0;
    for (const auto& q : full_partition) {
      Rational v = piece_utility(a, q, instance);
      if (v > best) best = std::move(v);
    }
    for (std::size_t p = 0; p < leftover.size(); ++p) {
      if (piece_utility(a, leftover[p], instance) >= best) g.adjacency[i].push_back(p);
    }
  }
  return g;
}

Matching max_bipartite_matching(const Bigraph& g) {
  Matching m;
  m.partner.assign(g.left.size(), Matching::kUnmatched);
  std::vector<std::size_t> owner(g.right.size(), Matching::kUnmatched);
  std::vector<bool> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t p : g.adjacency[i]) {
      if (seen[p]) continue;
      seen[p] = true;
      if (owner[p] == Matching::kUnmatched || augment(owner[p])) {
        owner[p] = i;
        m.partner[i] = p;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < g.left.size(); ++i) {
    seen.assign(g.right.size(), false);
    if (augment(i)) ++m.size;
  }
  return m;
}

}  // namespace efgc
