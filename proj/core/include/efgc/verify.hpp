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

#include <string>
#include <string_view>
#include <vector>

#include "efgc/model.hpp"

namespace efgc {

enum class CheckKind { Shape, Tiling, Connectivity, VertexDisjointness, EnvyFreeness };

std::string_view check_name(CheckKind kind);

struct Failure {
  CheckKind kind;
  std::string detail;
};

struct VerificationReport {
  std::vector<Failure> failures;

  bool valid() const { return failures.empty(); }
  bool failed(CheckKind kind) const;
  std::string to_text() const;
};

// Independent checker for solver output. Never throws; every failed check is
// recorded. Vertex-disjointness is only checked for VDGC instances.
VerificationReport verify_assignment(const Instance& instance, const Assignment& assignment);

// Any two agents whose pieces are single edge pieces of the same edge hold
// intervals of equal length. Holds for every envy-free assignment.
bool single_piece_lengths_agree(const Assignment& assignment);

}  // namespace efgc
