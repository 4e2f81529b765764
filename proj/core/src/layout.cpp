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

#include "layout.hpp"

#include "efgc/errors.hpp"

namespace efgc::detail {

std::vector<std::pair<AgentIndex, EdgePiece>> lay_out_edge(EdgeIndex e,
                                                           const std::vector<Segment>& segments) {
  std::vector<Segment> merged;
  for (const auto& s : segments) {
    if (s.length < 0) throw InconsistentLengths("negative length on edge " + std::to_string(e));
    if (s.length == 0 && !s.anchor) continue;
    if (!merged.empty() && merged.back().agent == s.agent) {
      merged.back().length += s.length;
      merged.back().anchor = merged.back().anchor || s.anchor;
    } else {
      merged.push_back(s);
    }
  }
  std::vector<std::pair<AgentIndex, EdgePiece>> out;
  Rational pos = 0;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    EdgePiece p;
    p.edge = e;
    p.lo = pos;
    p.hi = pos + merged[i].length;
    pos = p.hi;
    if (p.lo == p.hi) {
      p.lo_closed = p.hi_closed = true;
    } else {
      const bool last = i + 1 == merged.size();
      p.lo_closed = i == 0;
      p.hi_closed = last || p.hi != 1;
    }
    out.emplace_back(merged[i].agent, std::move(p));
  }
  if (pos != 1) {
    throw InconsistentLengths("lengths on edge " + std::to_string(e) + " sum to " + to_string(pos));
  }
  return out;
}

void add_to_pieces(const std::vector<std::pair<AgentIndex, EdgePiece>>& parts,
                   std::vector<Piece>& pieces) {
  for (const auto& [agent, part] : parts) pieces.at(agent).parts.push_back(part);
}

}  // namespace efgc::detail
