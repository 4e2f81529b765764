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

#include "efgc/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "efgc/errors.hpp"

namespace efgc {

bool numpart_dp(const NumPartInput& values) {
  const std::uint64_t total = std::accumulate(values.begin(), values.end(), std::uint64_t{0});
  if (total % 2 != 0) return false;
  const std::uint64_t half = total / 2;
  std::vector<bool> reachable(half + 1, false);
  reachable[0] = true;
  for (std::uint64_t s : values) {
    if (s == 0 || s > half) continue;
    for (std::uint64_t t = half; t >= s; --t) {
      if (reachable[t - s]) reachable[t] = true;
      if (t == s) break;
    }
  }
  return reachable[half];
}

namespace {

Instance two_identical_agents(Graph graph, const std::vector<Rational>& utilities, Variant variant) {
  Instance inst;
  inst.graph = std::move(graph);
  inst.agents = {"a1", "a2"};
  inst.utilities = {utilities, utilities};
  inst.variant = variant;
  return normalize(std::move(inst));
}

void require_nonempty(const NumPartInput& values) {
  if (values.empty()) throw GeneratorError(GeneratorError::Kind::EmptyInput, "no values given");
}

void require_positive(const NumPartInput& values) {
  if (std::accumulate(values.begin(), values.end(), std::uint64_t{0}) == 0) {
    throw GeneratorError(GeneratorError::Kind::ZeroSum, "values sum to 0");
  }
  for (std::uint64_t s : values) {
    if (s == 0) throw GeneratorError(GeneratorError::Kind::NonPositiveValue, "values must be positive");
  }
}

Rational as_rational(std::uint64_t s) { return Rational(std::to_string(s)); }

}  // namespace

Instance gen_star_from_numpart(const NumPartInput& values) {
  require_nonempty(values);
  if (std::accumulate(values.begin(), values.end(), std::uint64_t{0}) == 0) {
    throw GeneratorError(GeneratorError::Kind::ZeroSum, "values sum to 0");
  }
  std::vector<std::string> vertices{"c"};
  std::vector<EdgeSpec> edges;
  std::vector<Rational> utilities;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string leaf = "l" + std::to_string(i + 1);
    vertices.push_back(leaf);
    edges.push_back({"e" + std::to_string(i + 1), "c", leaf});
    utilities.push_back(as_rational(values[i]));
  }
  return two_identical_agents(Graph(vertices, edges), utilities, Variant::GC);
}

Instance gen_matching_plus_two(const NumPartInput& values) {
  require_nonempty(values);
  require_positive(values);
  std::vector<std::string> vertices{"c1", "c2"};
  std::vector<EdgeSpec> edges;
  std::vector<Rational> utilities;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string l = "l" + std::to_string(i + 1);
    vertices.push_back(l);
    vertices.push_back(l + "'");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string l = "l" + std::to_string(i + 1);
    edges.push_back({"c1_" + l, "c1", l});
    utilities.push_back(0);
    edges.push_back({"c2_" + l, "c2", l});
    utilities.push_back(0);
    edges.push_back({"m" + std::to_string(i + 1), l, l + "'"});
    utilities.push_back(as_rational(values[i]));
  }
  return two_identical_agents(Graph(vertices, edges), utilities, Variant::VDGC);
}

Instance gen_ladder_tw2(const NumPartInput& values, Variant variant) {
  require_nonempty(values);
  require_positive(values);
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<Rational> utilities;
  const std::size_t n = values.size();
  for (std::size_t i = 1; i <= n; ++i) {
    for (const char* p : {"a", "b", "c", "d"}) vertices.push_back(p + std::to_string(i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string s = std::to_string(i);
    edges.push_back({"ac" + s, "a" + s, "c" + s});
    utilities.push_back(0);
    edges.push_back({"cb" + s, "c" + s, "b" + s});
    utilities.push_back(0);
    edges.push_back({"cd" + s, "c" + s, "d" + s});
    utilities.push_back(as_rational(values[i - 1]));
  }
  for (std::size_t i = 1; i < n; ++i) {
    const std::string s = std::to_string(i);
    const std::string t = std::to_string(i + 1);
    edges.push_back({"aa" + s, "a" + s, "a" + t});
    utilities.push_back(0);
    edges.push_back({"bb" + s, "b" + s, "b" + t});
    utilities.push_back(0);
  }
  return two_identical_agents(Graph(vertices, edges), utilities, variant);
}

Instance blowup_gc_to_vdgc(const Instance& instance) {
  const Graph& g = instance.graph;
  const std::size_t k = g.edge_count();
  auto copy_name = [](const std::string& v, std::size_t j) { return v + "~" + std::to_string(j); };
  std::vector<std::string> vertices;
  for (const auto& v : g.vertices()) {
    for (std::size_t j = 0; j < k; ++j) vertices.push_back(copy_name(v, j));
  }
  std::vector<EdgeSpec> edges;
  for (EdgeIndex j = 0; j < k; ++j) {
    const Edge& e = g.edge(j);
    edges.push_back({e.id, copy_name(g.vertex_name(e.tail), j), copy_name(g.vertex_name(e.head), j)});
  }
  for (const auto& v : g.vertices()) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        edges.push_back({v + "~" + std::to_string(i) + "~" + std::to_string(j), copy_name(v, i), copy_name(v, j)});
      }
    }
  }
  Instance out;
  out.graph = Graph(vertices, edges);
  out.agents = instance.agents;
  out.variant = Variant::VDGC;
  for (AgentIndex a = 0; a < instance.agent_count(); ++a) {
    std::vector<Rational> u(out.graph.edge_count(), Rational(0));
    for (EdgeIndex j = 0; j < k; ++j) u[j] = instance.utility(a, j);
    out.utilities.push_back(std::move(u));
  }
  return out;
}

}  // namespace efgc
