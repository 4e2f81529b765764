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

#include <vector>

#include "efgc/lp.hpp"

namespace efgc {

// One entry per form, each -1, 0 or +1.
using SignVector = std::vector<int>;

struct CellWitness {
  SignVector sign;
  Point point;
};

enum class CellMethod {
  // Incremental.
  Auto,
  // Neighbour search from a seed cell: single-coordinate changes plus
  // simultaneous changes of two coordinates.
  Bfs,
  // All 3^s candidate sign vectors.
  Sweep,
  // Depth-first over form prefixes, extending only realizable prefixes.
  Incremental,
};

// Sign of the form at the point.
int sign_at(const LinearForm& form, const Point& point);
SignVector sign_vector(const std::vector<LinearForm>& forms, const Point& point);

// Forms up to positive scaling and negation. sign(forms[i]) equals
// orientation[i] * sign(unique[index[i]]); constant forms get index npos and
// their fixed sign in orientation.
struct DedupedForms {
  std::vector<LinearForm> unique;
  std::vector<std::size_t> index;
  std::vector<int> orientation;
};
DedupedForms dedupe_forms(const std::vector<LinearForm>& forms);

// Every sign vector of `forms` realized by a point satisfying `region`, with a
// witness each, sorted lexicographically by sign vector. The region must not
// contain strict constraints. Throws EmptyRegion if the region is infeasible.
std::vector<CellWitness> enumerate_sign_conditions(const std::vector<LinearForm>& forms,
                                                   const LinearSystem& region,
                                                   CellMethod method = CellMethod::Auto);

}  // namespace efgc
