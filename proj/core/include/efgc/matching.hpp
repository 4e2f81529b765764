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
#include <vector>

#include "efgc/model.hpp"

namespace efgc {

struct Bigraph {
  std::vector<AgentIndex> left;
  // Indices into the leftover piece list.
  std::vector<std::size_t> right;
  // adjacency[i] lists right indices joined to left[i], ascending.
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t edge_count() const;
};

struct Matching {
  static constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);
  // partner[i] is the right index matched to left i, or kUnmatched.
  std::vector<std::size_t> partner;
  std::size_t size = 0;

  bool perfect(const Bigraph& g) const { return size == g.left.size() && size == g.right.size(); }
};

// Agent a is joined to leftover piece p iff u_a(p) >= u_a(q) for every piece q
// of the full partition.
Bigraph compatibility_graph(const Instance& instance, const std::vector<Piece>& full_partition,
                            const std::vector<AgentIndex>& unassigned,
                            const std::vector<Piece>& leftover);

// Augmenting paths, scanned in index order.
Matching max_bipartite_matching(const Bigraph& g);

}  // namespace efgc
