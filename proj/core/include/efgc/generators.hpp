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

#include <cstdint>
#include <vector>

#include "efgc/model.hpp"

namespace efgc {

using NumPartInput = std::vector<std::uint64_t>;

// True iff the values split into two parts of equal sum.
bool numpart_dp(const NumPartInput& values);

// Star with one leaf edge per value; two agents both valuing leaf i at s_i.
// GC. Throws GeneratorError (EmptyInput, ZeroSum).
Instance gen_star_from_numpart(const NumPartInput& values);

// Vertices c1, c2 and l_i, l_i' per value; edges c_j l_i and l_i l_i'; both
// agents value l_i l_i' at s_i and everything else at 0. VDGC.
// Throws GeneratorError (EmptyInput, NonPositiveValue).
Instance gen_matching_plus_two(const NumPartInput& values);

// Gadget a_i c_i, c_i b_i, c_i d_i per value, rails a_i a_{i+1} and
// b_i b_{i+1}; both agents value c_i d_i at s_i. Throws GeneratorError.
Instance gen_ladder_tw2(const NumPartInput& values, Variant variant);

// Every vertex v becomes a clique of |E| vertices v~0..v~(|E|-1) joined by
// zero-utility edges; original edge j is reattached to the clique vertices
// with suffix j. Result is VDGC.
Instance blowup_gc_to_vdgc(const Instance& instance);

}  // namespace efgc
