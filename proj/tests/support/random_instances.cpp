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

#include "random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace efgc::testing {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Instance make_instance(const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges,
                       const std::vector<std::vector<Rational>>& utilities, Variant variant) {
  Instance inst;
  inst.graph = Graph(vertices, edges);
  for (std::size_t a = 0; a < utilities.size(); ++a) inst.agents.push_back("a" + std::to_string(a + 1));
  inst.utilities = utilities;
  inst.variant = variant;
  check_instance(inst);
  return normalize(std::move(inst));
}

Instance identical_agents(const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges,
                          std::size_t agents, Variant variant) {
  std::vector<std::vector<Rational>> rows(agents, std::vector<Rational>(edges.size(), Rational(1)));
  return make_instance(vertices, edges, rows, variant);
}

std::vector<std::vector<Rational>> random_utilities(Rng& rng, std::size_t agents, std::size_t edges) {
  std::vector<std::vector<Rational>> rows(agents, std::vector<Rational>(edges));
  for (auto& row : rows) {
    do {
      for (auto& u : row) {
        u = Rational(static_cast<long>(uniform(rng, 0, 4)), static_cast<long>(uniform(rng, 1, 3)));
        u.canonicalize();
      }
    } while (std::all_of(row.begin(), row.end(), [](const Rational& u) { return u == 0; }));
  }
  return rows;
}

std::vector<std::vector<Rational>> clashing_utilities(Rng& rng, std::size_t agents, std::size_t edges) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t a = 0; a < agents; ++a) {
    if (a > 0 && uniform(rng, 0, 1) == 0) {
      rows.push_back(rows[uniform(rng, 0, a - 1)]);
      continue;
    }
    std::vector<Rational> row(edges);
    do {
      for (auto& u : row) u = Rational(static_cast<long>(uniform(rng, 0, 2) == 0 ? 0 : uniform(rng, 1, 2)));
    } while (std::all_of(row.begin(), row.end(), [](const Rational& u) { return u == 0; }));
    rows.push_back(std::move(row));
  }
  return rows;
}

Instance with_utilities(Instance instance, std::vector<std::vector<Rational>> utilities) {
  instance.agents.clear();
  for (std::size_t a = 0; a < utilities.size(); ++a) instance.agents.push_back("a" + std::to_string(a + 1));
  instance.utilities = std::move(utilities);
  check_instance(instance);
  return normalize(std::move(instance));
}

namespace {

// Names vertex i of the construction "v<perm[i]+1>" and lists vertices by
// name, so the ordering differs from the construction order.
Instance from_pairs(Rng& rng, std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                    std::size_t agents, Variant variant) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i + 1));
  std::vector<EdgeSpec> edges;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    edges.push_back({"e" + std::to_string(j + 1), vertices[perm[pairs[j].first]], vertices[perm[pairs[j].second]]});
  }
  return make_instance(vertices, edges, random_utilities(rng, agents, pairs.size()), variant);
}

}  // namespace

Instance random_path(Rng& rng, std::size_t edges, std::size_t agents, Variant variant) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < edges; ++i) pairs.emplace_back(i, i + 1);
  return from_pairs(rng, edges + 1, pairs, agents, variant);
}

Instance random_tree(Rng& rng, std::size_t edges, std::size_t agents, Variant variant) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= edges; ++i) pairs.emplace_back(uniform(rng, 0, i - 1), i);
  return from_pairs(rng, edges + 1, pairs, agents, variant);
}

Instance random_cycle(Rng& rng, std::size_t edges, std::size_t agents, Variant variant) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < edges; ++i) pairs.emplace_back(i, (i + 1) % edges);
  return from_pairs(rng, edges, pairs, agents, variant);
}

Instance random_connected(Rng& rng, std::size_t edges, std::size_t agents, Variant variant) {
  std::size_t min_vertices = 2;
  while (min_vertices * (min_vertices - 1) / 2 < edges) ++min_vertices;
  const std::size_t n = uniform(rng, min_vertices, edges + 1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t j = uniform(rng, 0, i - 1);
    pairs.emplace_back(j, i);
    used.insert({j, i});
  }
  std::vector<std::pair<std::size_t, std::size_t>> spare;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!used.count({i, j})) spare.emplace_back(i, j);
    }
  }
  std::shuffle(spare.begin(), spare.end(), rng);
  for (std::size_t i = 0; pairs.size() < edges; ++i) pairs.push_back(spare[i]);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  return from_pairs(rng, n, pairs, agents, variant);
}

}  // namespace efgc::testing
