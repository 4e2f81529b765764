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

#include "efgc/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace efgc {

std::string_view check_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::Shape: return "shape";
    case CheckKind::Tiling: return "tiling";
    case CheckKind::Connectivity: return "connectivity";
    case CheckKind::VertexDisjointness: return "vertex-disjointness";
    case CheckKind::EnvyFreeness: return "envy-freeness";
  }
  return "unknown";
}

bool VerificationReport::failed(CheckKind kind) const {
  return std::any_of(failures.begin(), failures.end(),
                     [kind](const Failure& f) { return f.kind == kind; });
}

std::string VerificationReport::to_text() const {
  if (valid()) return "valid\n";
  std::ostringstream out;
  out << "invalid\n";
  for (const auto& f : failures) out << check_name(f.kind) << ": " << f.detail << "\n";
  return out.str();
}

namespace {

struct Located {
  AgentIndex agent;
  const EdgePiece* part;
};

// Covers [0,1] with no gaps (closure-aware) and has total length exactly 1.
// Together these force pairwise disjoint interiors.
std::string tiling_problem(std::vector<Located> parts) {
  Rational total = 0;
  for (const auto& p : parts) total += p.part->length();
  if (total != 1) return "total length " + to_string(total) + " instead of 1";

  std::sort(parts.begin(), parts.end(), [](const Located& x, const Located& y) {
    if (x.part->lo != y.part->lo) return x.part->lo < y.part->lo;
    return x.part->lo_closed && !y.part->lo_closed;
  });
  Rational reach = 0;
  bool reach_covered = false;
  for (const auto& p : parts) {
    const EdgePiece& q = *p.part;
    if (q.lo > reach || (q.lo == reach && !reach_covered && !q.lo_closed)) {
      return "point " + to_string(reach) + " is not covered";
    }
    if (q.hi > reach) {
      reach = q.hi;
      reach_covered = q.hi_closed;
    } else if (q.hi == reach && q.hi_closed) {
      reach_covered = true;
    }
  }
  if (reach != 1 || !reach_covered) return "point " + to_string(reach) + " is not covered";
  return {};
}

}  // namespace

VerificationReport verify_assignment(const Instance& instance, const Assignment& assignment) {
  VerificationReport report;
  const Graph& graph = instance.graph;
  const std::size_t m = instance.agent_count();

  if (assignment.pieces.size() != m) {
    report.failures.push_back({CheckKind::Shape, "expected " + std::to_string(m) + " pieces, got " +
                                                     std::to_string(assignment.pieces.size())});
    return report;
  }
  bool shape_ok = true;
  for (AgentIndex a = 0; a < m; ++a) {
    for (const auto& part : assignment.pieces[a].parts) {
      if (part.edge >= graph.edge_count() || !part.well_formed()) {
        report.failures.push_back(
            {CheckKind::Shape, "agent '" + instance.agents[a] + "' holds a malformed edge piece"});
        shape_ok = false;
      }
    }
  }
  if (!shape_ok) return report;

  std::vector<std::vector<Located>> by_edge(graph.edge_count());
  for (AgentIndex a = 0; a < m; ++a) {
    for (const auto& part : assignment.pieces[a].parts) by_edge[part.edge].push_back({a, &part});
  }
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    auto problem = tiling_problem(by_edge[e]);
    if (!problem.empty()) {
      report.failures.push_back({CheckKind::Tiling, "edge '" + graph.edge(e).id + "': " + problem});
    }
  }

  for (AgentIndex a = 0; a < m; ++a) {
    if (!is_connected_piece(assignment.pieces[a], graph)) {
      report.failures.push_back(
          {CheckKind::Connectivity, "piece of agent '" + instance.agents[a] + "' is not connected"});
    }
  }

  if (instance.variant == Variant::VDGC) {
    for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
      std::set<AgentIndex> holders;
      for (EdgeIndex e : graph.incident(v)) {
        const Rational coord(graph.coordinate_of(e, v));
        for (const auto& p : by_edge[e]) {
          if (p.part->contains(coord)) holders.insert(p.agent);
        }
      }
      if (holders.size() > 1) {
        report.failures.push_back({CheckKind::VertexDisjointness,
                                   "vertex '" + graph.vertex_name(v) + "' is held by " +
                                       std::to_string(holders.size()) + " agents"});
      }
    }
  }

  for (AgentIndex a = 0; a < m; ++a) {
    const Rational own = piece_utility(a, assignment.pieces[a], instance);
    for (AgentIndex b = 0; b < m; ++b) {
      if (a == b) continue;
      const Rational other = piece_utility(a, assignment.pieces[b], instance);
      if (other > own) {
        report.failures.push_back({CheckKind::EnvyFreeness, "agent '" + instance.agents[a] +
                                                                "' envies '" + instance.agents[b] +
                                                                "' (" + to_string(own) + " < " +
                                                                to_string(other) + ")"});
      }
    }
  }
  return report;
}

bool single_piece_lengths_agree(const Assignment& assignment) {
  std::map<EdgeIndex, Rational> length_on_edge;
  for (const auto& piece : assignment.pieces) {
    if (piece.parts.size() != 1) continue;
    const auto& part = piece.parts.front();
    auto [it, inserted] = length_on_edge.emplace(part.edge, part.length());
    if (!inserted && it->second != part.length()) return false;
  }
  return true;
}

}  // namespace efgc
