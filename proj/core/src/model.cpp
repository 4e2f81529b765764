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

#include "efgc/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>

#include "efgc/errors.hpp"

namespace efgc {

std::string_view variant_name(Variant v) { return v == Variant::GC ? "gc" : "vdgc"; }

Graph::Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)) {
  std::unordered_map<std::string, VertexIndex> index;
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (!index.emplace(vertices_[v], v).second) {
      throw ValidationError("vertex-ids", "duplicate vertex '" + vertices_[v] + "'");
    }
  }
  if (vertices_.empty()) throw ValidationError("connected", "graph has no vertices");

  std::set<std::string> edge_ids;
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  incident_.assign(vertices_.size(), {});
  for (const auto& spec : edges) {
    if (!edge_ids.insert(spec.id).second) {
      throw ValidationError("edge-ids", "duplicate edge '" + spec.id + "'");
    }
    auto t = index.find(spec.tail);
    auto h = index.find(spec.head);
    if (t == index.end() || h == index.end()) {
      throw ValidationError("endpoints", "edge '" + spec.id + "' names an unknown vertex");
    }
    if (t->second == h->second) {
      throw ValidationError("simple", "edge '" + spec.id + "' is a loop");
    }
    Edge e;
    e.id = spec.id;
    e.tail = t->second;
    e.head = h->second;
    e.ends = {std::min(e.tail, e.head), std::max(e.tail, e.head)};
    if (!seen.insert({e.ends[0], e.ends[1]}).second) {
      throw ValidationError("simple", "edge '" + spec.id + "' is parallel to another edge");
    }
    incident_[e.ends[0]].push_back(edges_.size());
    incident_[e.ends[1]].push_back(edges_.size());
    edges_.push_back(std::move(e));
  }

  std::vector<bool> reached(vertices_.size(), false);
  std::vector<VertexIndex> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : incident_[v]) {
      VertexIndex w = edges_[e].ends[0] == v ? edges_[e].ends[1] : edges_[e].ends[0];
      if (!reached[w]) {
        reached[w] = true;
        stack.push_back(w);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw ValidationError("connected", "graph is disconnected");
  }
}

std::optional<VertexIndex> Graph::find_vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

std::optional<EdgeIndex> Graph::find_edge(std::string_view id) const {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
  if (it == edges_.end()) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& inc : incident_) best = std::max(best, inc.size());
  return best;
}

int Graph::coordinate_of(EdgeIndex e, VertexIndex v) const {
  const Edge& edge = edges_.at(e);
  if (edge.ends[0] == v) return 0;
  if (edge.ends[1] == v) return 1;
  throw std::invalid_argument("vertex is not an endpoint of the edge");
}

bool Graph::is_tree() const { return edges_.size() + 1 == vertices_.size(); }

bool Graph::is_cycle() const {
  if (vertices_.size() < 3 || edges_.size() != vertices_.size()) return false;
  return std::all_of(incident_.begin(), incident_.end(),
                     [](const auto& inc) { return inc.size() == 2; });
}

std::optional<AgentIndex> Instance::find_agent(std::string_view name) const {
  auto it = std::find(agents.begin(), agents.end(), name);
  if (it == agents.end()) return std::nullopt;
  return static_cast<AgentIndex>(it - agents.begin());
}

void check_instance(const Instance& instance) {
  if (instance.agents.empty()) throw ValidationError("agents", "instance has no agents");
  std::set<std::string> names(instance.agents.begin(), instance.agents.end());
  if (names.size() != instance.agents.size()) {
    throw ValidationError("agent-ids", "duplicate agent name");
  }
  if (instance.utilities.size() != instance.agents.size()) {
    throw ValidationError("utilities", "one utility row per agent required");
  }
  for (std::size_t a = 0; a < instance.agents.size(); ++a) {
    if (instance.utilities[a].size() != instance.edge_count()) {
      throw ValidationError("utilities", "agent '" + instance.agents[a] + "' needs one utility per edge");
    }
    for (const auto& u : instance.utilities[a]) {
      if (u < 0) {
        throw ValidationError("nonnegative", "agent '" + instance.agents[a] + "' has a negative utility");
      }
    }
  }
}

bool is_normalized(const Instance& instance) {
  for (const auto& row : instance.utilities) {
    Rational total = std::accumulate(row.begin(), row.end(), Rational(0));
    if (total != 1) return false;
  }
  return true;
}

Instance normalize(Instance instance) {
  for (std::size_t a = 0; a < instance.utilities.size(); ++a) {
    auto& row = instance.utilities[a];
    Rational total = std::accumulate(row.begin(), row.end(), Rational(0));
    if (total == 0) throw AllZeroAgent(instance.agents.at(a));
    for (auto& u : row) u /= total;
  }
  return instance;
}

bool EdgePiece::contains(const Rational& c) const {
  if (c < lo || c > hi) return false;
  if (c == lo && !lo_closed) return false;
  if (c == hi && !hi_closed) return false;
  return true;
}

bool EdgePiece::well_formed() const {
  if (lo < 0 || hi > 1 || lo > hi) return false;
  if (lo == hi && !(lo_closed && hi_closed)) return false;
  return true;
}

EdgePiece whole_edge(EdgeIndex e) { return EdgePiece{e, Rational(0), Rational(1), true, true}; }

Rational piece_utility(AgentIndex agent, const Piece& piece, const Instance& instance) {
  Rational total = 0;
  for (const auto& part : piece.parts) {
    if (part.edge >= instance.edge_count()) throw UnknownEdge(part.edge);
    total += part.length() * instance.utility(agent, part.edge);
  }
  return total;
}

namespace {

bool intervals_intersect(const EdgePiece& p, const EdgePiece& q) {
  const Rational& lo = p.lo > q.lo ? p.lo : q.lo;
  const Rational& hi = p.hi < q.hi ? p.hi : q.hi;
  if (lo < hi) return true;
  if (lo > hi) return false;
  return p.contains(lo) && q.contains(lo);
}

}  // namespace

bool are_adjacent(const EdgePiece& p, const EdgePiece& q, const Graph& graph) {
  if (p.edge == q.edge) return intervals_intersect(p, q);
  const Edge& e = graph.edge(p.edge);
  const Edge& f = graph.edge(q.edge);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (e.ends[i] == f.ends[j] && p.contains(Rational(i)) && q.contains(Rational(j))) return true;
    }
  }
  return false;
}

bool is_connected_piece(const Piece& piece, const Graph& graph) {
  const auto& parts = piece.parts;
  if (parts.size() <= 1) return true;
  std::vector<bool> reached(parts.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (!reached[j] && are_adjacent(parts[i], parts[j], graph)) {
        reached[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == parts.size();
}

}  // namespace efgc
