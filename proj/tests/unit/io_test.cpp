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

#include <gtest/gtest.h>

#include "efgc/dispatch.hpp"
#include "efgc/errors.hpp"
#include "efgc/io.hpp"
#include "efgc/verify.hpp"
#include "fixtures.hpp"
#include "random_instances.hpp"

namespace efgc {
namespace {

using testing::part;
using testing::q;

constexpr const char* kP3 = R"(efgc-instance v1
variant gc
vertices v1 v2 v3        # listing order = the fixed vertex ordering
edge e1 v1 v2
edge e2 v2 v3
agent a1 e1=1 e2=0
agent a2 e1=0 e2=1
)";

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(ParseInstance, PathExample) {
  const Instance inst = parse_instance(kP3);
  EXPECT_EQ(inst.graph.vertex_count(), 3u);
  EXPECT_EQ(inst.graph.edge_count(), 2u);
  EXPECT_EQ(inst.agent_count(), 2u);
  EXPECT_EQ(inst.variant, Variant::GC);
  EXPECT_EQ(inst.utility(0, 0), q(1));
}

TEST(ParseInstance, NormalizesAndAcceptsFractions) {
  const Instance inst = parse_instance("efgc-instance v1\nvariant vdgc\nvertices a b c\nedge x a b\nedge y b c\n"
                                       "agent p x=1/2 y=3/2\n");
  EXPECT_EQ(inst.utility(0, 0), q(1, 4));
  EXPECT_EQ(inst.utility(0, 1), q(3, 4));
  EXPECT_EQ(inst.variant, Variant::VDGC);
}

TEST(ParseInstance, MissingUtilitiesDefaultToZero) {
  const Instance inst = parse_instance("efgc-instance v1\nvariant gc\nvertices a b c\nedge x a b\nedge y b c\nagent p y=2\n");
  EXPECT_EQ(inst.utility(0, 0), q(0));
  EXPECT_EQ(inst.utility(0, 1), q(1));
}

TEST(ParseInstance, DuplicateEdgeIdIsParseError) {
  EXPECT_EQ(parse_error_line("efgc-instance v1\nvariant gc\nvertices a b c\nedge e a b\nedge e b c\nagent p e=1\n"), 5u);
}

TEST(ParseInstance, DisconnectedGraphIsValidationError) {
  try {
    parse_instance("efgc-instance v1\nvariant gc\nvertices a b c d\nedge e a b\nedge f c d\nagent p e=1\n");
    FAIL() << "no error";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.invariant(), "connected");
  }
}

TEST(ParseInstance, ReportsLineNumbers) {
  EXPECT_EQ(parse_error_line("nonsense\n"), 1u);
  EXPECT_EQ(parse_error_line("efgc-instance v1\nvariant gc\nvertices a b\n\nedge e a b\nagent p e=1/0\n"), 6u);
  EXPECT_EQ(parse_error_line("efgc-instance v1\nvariant xx\n"), 2u);
  EXPECT_EQ(parse_error_line("efgc-instance v1\nvariant gc\nvertices a b\nedge e a b\nagent p f=1\n"), 5u);
  EXPECT_EQ(parse_error_line("efgc-instance v1\nvariant gc\nvertices a b\nedge e a b\nagent p e=1\nagent p e=2\n"), 6u);
  EXPECT_EQ(parse_error_line("efgc-instance v1\nvariant gc\nvertices a b\nedge e a b\nfrobnicate\n"), 5u);
}

TEST(ParseInstance, AllZeroAgent) {
  EXPECT_THROW(parse_instance("efgc-instance v1\nvariant gc\nvertices a b\nedge e a b\nagent p e=0\n"), AllZeroAgent);
}

TEST(ParseInstance, NegativeUtilityIsValidationError) {
  EXPECT_THROW(parse_instance("efgc-instance v1\nvariant gc\nvertices a b\nedge e a b\nagent p e=-1\n"),
               ValidationError);
}

TEST(EmitInstance, RoundTrips) {
  testing::Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = testing::random_connected(rng, testing::uniform(rng, 1, 5), testing::uniform(rng, 1, 3),
                                                    trial % 2 ? Variant::GC : Variant::VDGC);
    const Instance back = parse_instance(emit_instance(inst));
    EXPECT_EQ(back.graph.vertices(), inst.graph.vertices());
    EXPECT_EQ(back.utilities, inst.utilities);
    EXPECT_EQ(back.agents, inst.agents);
    EXPECT_EQ(back.variant, inst.variant);
    EXPECT_EQ(emit_instance(back), emit_instance(inst));
  }
}

TEST(Assignment, HalvesOfOneEdge) {
  const Instance inst = testing::single_edge(testing::rows({{1}, {1}}));
  const Assignment a{{Piece{{part(0, 0, q(1, 2))}}, Piece{{part(0, q(1, 2), 1, false, true)}}}};
  EXPECT_EQ(emit_assignment(a, inst),
            "efgc-assignment v1\npiece a1 e1 0 1/2 closed closed\npiece a2 e1 1/2 1 open closed\n");
  EXPECT_EQ(parse_assignment(emit_assignment(a, inst), inst), a);
}

TEST(Assignment, ZeroLengthPiece) {
  const Instance inst = testing::single_edge(testing::rows({{1}, {1}}));
  const Assignment a{{Piece{{whole_edge(0)}}, Piece{{part(0, 1, 1)}}}};
  EXPECT_NE(emit_assignment(a, inst).find("piece a2 e1 1 1 closed closed"), std::string::npos);
  EXPECT_EQ(parse_assignment(emit_assignment(a, inst), inst), a);
}

TEST(Assignment, MalformedRational) {
  const Instance inst = testing::single_edge(testing::rows({{1}}));
  EXPECT_THROW(parse_assignment("efgc-assignment v1\npiece a1 e1 0 1/0 closed closed\n", inst), ParseError);
  EXPECT_THROW(parse_assignment("efgc-assignment v1\npiece zz e1 0 1 closed closed\n", inst), ParseError);
  EXPECT_THROW(parse_assignment("efgc-assignment v1\npiece a1 e1 0 1 shut closed\n", inst), ParseError);
}

TEST(Assignment, SolverWitnessesRoundTrip) {
  testing::Rng rng(73);
  for (int trial = 0; trial < 15; ++trial) {
    const Instance inst = testing::random_connected(rng, testing::uniform(rng, 1, 3), testing::uniform(rng, 1, 3),
                                                    trial % 2 ? Variant::GC : Variant::VDGC);
    const Verdict v = solve(inst);
    if (!v.yes) continue;
    const Assignment back = parse_assignment(emit_assignment(*v.assignment, inst), inst);
    EXPECT_EQ(back, *v.assignment);
    EXPECT_TRUE(verify_assignment(inst, back).valid());
  }
}

TEST(ParseLinear, FormsAndSystem) {
  const LinearFile f = parse_linear("efgc-linear v1\nvars x y\nform 0 x=1 y=-1\nge 1 x=-1\ngt 0 y=1\neq -1/2 x=1\n");
  EXPECT_EQ(f.variables, (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(f.forms.size(), 1u);
  EXPECT_EQ(f.forms[0].coefficient(1), q(-1));
  ASSERT_EQ(f.system.size(), 3u);
  EXPECT_EQ(f.system.constraints()[1].relation, Relation::Gt);
  EXPECT_EQ(f.system.constraints()[2].form.constant(), q(-1, 2));
  EXPECT_THROW(parse_linear("efgc-linear v1\nform 0 x=1\n"), ParseError);
  EXPECT_THROW(parse_linear("efgc-linear v1\nvars x\nform 0 z=1\n"), ParseError);
}

TEST(Dispatch, AutoPicksSpecializedSolvers) {
  using testing::rows;
  EXPECT_EQ(resolve_mode(testing::path3(rows({{1, 1}}), Variant::VDGC), SolverMode::Auto), SolverMode::TreeVdgc);
  EXPECT_EQ(resolve_mode(testing::path3(rows({{1, 1}}), Variant::GC), SolverMode::Auto), SolverMode::TreeGc);
  EXPECT_EQ(resolve_mode(testing::triangle(rows({{1, 1, 1}})), SolverMode::Auto), SolverMode::Cycle);
  const Instance other = testing::make_instance(
      {"a", "b", "c", "d"}, {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "a"}, {"e4", "c", "d"}},
      rows({{1, 1, 1, 1}}), Variant::GC);
  EXPECT_EQ(resolve_mode(other, SolverMode::Auto), SolverMode::FewEdges);
  EXPECT_EQ(resolve_mode(other, SolverMode::Oracle), SolverMode::Oracle);
}

TEST(Dispatch, ModeNamesRoundTrip) {
  for (SolverMode m : {SolverMode::Auto, SolverMode::FewEdges, SolverMode::TreeVdgc, SolverMode::TreeGc,
                       SolverMode::Cycle, SolverMode::Oracle}) {
    EXPECT_EQ(parse_mode(mode_name(m)), m);
  }
  EXPECT_FALSE(parse_mode("bogus"));
}

}  // namespace
}  // namespace efgc
