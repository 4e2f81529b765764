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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efgc/rational.hpp"

namespace efgc {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;
using AgentIndex = std::size_t;

enum class Variant { GC, VDGC };

std::string_view variant_name(Variant v);

struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
};

struct Edge {
  std::string id;
  VertexIndex tail = 0;
  VertexIndex head = 0;
  // ends[0] sits at coordinate 0, i.e. the endpoint earlier in the vertex
  // order; ends[1] sits at coordinate 1.
  std::array<VertexIndex, 2> ends{};
};

// Connected simple graph with a fixed vertex ordering. Immutable after
// construction.
class Graph {
 public:
  Graph() = default;
  // Throws ValidationError naming the broken invariant ("vertex-ids",
  // "edge-ids", "endpoints", "simple", "connected").
  Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }

  std::optional<VertexIndex> find_vertex(std::string_view name) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;

  const std::vector<EdgeIndex>& incident(VertexIndex v) const { return incident_.at(v); }
  std::size_t degree(VertexIndex v) const { return incident_.at(v).size(); }
  std::size_t max_degree() const;

  // Vertex at coordinate `end` (0 or 1) of edge e.
  VertexIndex endpoint(EdgeIndex e, int end) const { return edges_.at(e).ends.at(end); }
  // Coordinate (0 or 1) of v on an incident edge e.
  int coordinate_of(EdgeIndex e, VertexIndex v) const;

  bool is_tree() const;
  bool is_cycle() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incident_;
};

struct Instance {
  Graph graph;
  std::vector<std::string> agents;
  // utilities[a][e]
  std::vector<std::vector<Rational>> utilities;
  Variant variant = Variant::GC;

  std::size_t agent_count() const { return agents.size(); }
  std::size_t edge_count() const { return graph.edge_count(); }
  const Rational& utility(AgentIndex a, EdgeIndex e) const { return utilities.at(a).at(e); }
  std::optional<AgentIndex> find_agent(std::string_view name) const;
};

// Checks shape (one utility per agent and edge, all >= 0, unique agent names).
// Throws ValidationError.
void check_instance(const Instance& instance);

bool is_normalized(const Instance& instance);

// Divides every agent's utilities by their sum. Throws AllZeroAgent.
Instance normalize(Instance instance);

struct EdgePiece {
  EdgeIndex edge = 0;
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  Rational length() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  // True iff `coordinate` lies in the interval including its boundary flags.
  bool contains(const Rational& coordinate) const;
  bool well_formed() const;

  friend bool operator==(const EdgePiece&, const EdgePiece&) = default;
};

EdgePiece whole_edge(EdgeIndex e);

struct Piece {
  std::vector<EdgePiece> parts;
  friend bool operator==(const Piece&, const Piece&) = default;
};

// pieces[a] is the piece of agent a.
struct Assignment {
  std::vector<Piece> pieces;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Sum of length * utility over the edge pieces. Throws UnknownEdge.
Rational piece_utility(AgentIndex agent, const Piece& piece, const Instance& instance);

// Edge pieces on distinct edges are adjacent iff they share an endpoint vertex
// and both contain its coordinate; pieces on the same edge are adjacent iff
// their intervals intersect.
bool are_adjacent(const EdgePiece& p, const EdgePiece& q, const Graph& graph);
bool is_connected_piece(const Piece& piece, const Graph& graph);

}  // namespace efgc
