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
#include <vector>

#include "efgc/model.hpp"
#include "random_instances.hpp"

namespace efgc::testing {

using Rows = std::vector<std::vector<Rational>>;

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rows rows(std::initializer_list<std::initializer_list<long>> values) {
  Rows out;
  for (const auto& row : values) {
    std::vector<Rational> r;
    for (long v : row) r.push_back(q(v));
    out.push_back(std::move(r));
  }
  return out;
}

inline Instance single_edge(const Rows& utilities, Variant variant = Variant::GC) {
  return make_instance({"u", "v"}, {{"e1", "u", "v"}}, utilities, variant);
}

// v1 - v2 - v3 with e1 = v1v2, e2 = v2v3.
inline Instance path3(const Rows& utilities, Variant variant = Variant::GC) {
  return make_instance({"v1", "v2", "v3"}, {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}}, utilities, variant);
}

// K_{1,3} with center c and leaf edges e1, e2, e3.
inline Instance star3(const Rows& utilities, Variant variant = Variant::GC) {
  return make_instance({"c", "l1", "l2", "l3"}, {{"e1", "c", "l1"}, {"e2", "c", "l2"}, {"e3", "c", "l3"}},
                       utilities, variant);
}

inline Instance triangle(const Rows& utilities, Variant variant = Variant::GC) {
  return make_instance({"v1", "v2", "v3"}, {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}, {"e3", "v3", "v1"}},
                       utilities, variant);
}

inline Instance star3_identical(Variant variant = Variant::GC) { return star3(rows({{1, 1, 1}, {1, 1, 1}}), variant); }

// v1 joined to v2..v6, plus v2v3 and v3v4.
inline Graph hub_graph() {
  return Graph({"v1", "v2", "v3", "v4", "v5", "v6"},
               {{"v1v2", "v1", "v2"},
                {"v1v3", "v1", "v3"},
                {"v1v4", "v1", "v4"},
                {"v1v5", "v1", "v5"},
                {"v1v6", "v1", "v6"},
                {"v2v3", "v2", "v3"},
                {"v3v4", "v3", "v4"}});
}

inline EdgePiece part(EdgeIndex e, Rational lo, Rational hi, bool lo_closed = true, bool hi_closed = true) {
  return EdgePiece{e, std::move(lo), std::move(hi), lo_closed, hi_closed};
}

}  // namespace efgc::testing
