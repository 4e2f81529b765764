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

#include <utility>
#include <vector>

#include "efgc/model.hpp"

namespace efgc::detail {

struct Segment {
  AgentIndex agent;
  Rational length;
  // Anchors own an edge end and keep zero-length claims; other zero-length
  // segments are dropped, leaving the agent an empty part.
  bool anchor = false;
};

// Places segments left to right on edge e. Consecutive segments of one agent
// are merged. The first segment is closed at 0 and the last at 1; an interior
// cut is closed on its left piece only. Zero-length segments are closed points.
// A segment that is not last but reaches 1 is open there (and symmetrically at
// 0), so the vertex goes to the zero-length claim at that end.
// Throws InconsistentLengths if lengths are negative or do not sum to 1.
std::vector<std::pair<AgentIndex, EdgePiece>> lay_out_edge(EdgeIndex e,
                                                           const std::vector<Segment>& segments);

// Appends each laid-out part to the piece of its agent.
void add_to_pieces(const std::vector<std::pair<AgentIndex, EdgePiece>>& parts,
                   std::vector<Piece>& pieces);

}  // namespace efgc::detail
