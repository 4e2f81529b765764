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

#include "efgc/errors.hpp"
#include "efgc/model.hpp"
#include "efgc/verify.hpp"
#include "fixtures.hpp"

namespace efgc {
namespace {

using testing::part;
using testing::q;
using testing::rows;

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(parse_rational("2/4"), q(1, 2));
  EXPECT_EQ(parse_rational("-3"), q(-3));
  EXPECT_EQ(to_string(q(6, 8)), "3/4");
  EXPECT_EQ(to_string(q(4, 2)), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
}

TEST(Graph, OrdersEndsByVertexList) {
  Graph g({"b", "a"}, {{"e", "a", "b"}});
  // "b" is listed first, so it sits at coordinate 0.
  EXPECT_EQ(g.vertex_name(g.endpoint(0, 0)), "b");
  EXPECT_EQ(g.vertex_name(g.endpoint(0, 1)), "a");
  EXPECT_EQ(g.coordinate_of(0, *g.find_vertex("a")), 1);
}

TEST(Graph, RejectsBrokenInvariants) {
  auto invariant = [](auto build) {
    try {
      build();
    } catch (const ValidationError& e) {
      return e.invariant();
    }
    return std::string("none");
  };
  EXPECT_EQ(invariant([] { Graph({"a", "a"}, {}); }), "vertex-ids");
  EXPECT_EQ(invariant([] { Graph({"a", "b"}, {{"e", "a", "b"}, {"e", "b", "a"}}); }), "edge-ids");
  EXPECT_EQ(invariant([] { Graph({"a", "b"}, {{"e", "a", "x"}}); }), "endpoints");
  EXPECT_EQ(invariant([] { Graph({"a"}, {{"e", "a", "a"}}); }), "simple");
  EXPECT_EQ(invariant([] { Graph({"a", "b"}, {{"e", "a", "b"}, {"f", "b", "a"}}); }), "simple");
  EXPECT_EQ(invariant([] { Graph({"a", "b", "c", "d"}, {{"e", "a", "b"}, {"f", "c", "d"}}); }), "connected");
}

TEST(Graph, RecognizesTreesAndCycles) {
  EXPECT_TRUE(testing::star3_identical().graph.is_tree());
  EXPECT_FALSE(testing::star3_identical().graph.is_cycle());
  EXPECT_TRUE(testing::triangle(rows({{1, 1, 1}})).graph.is_cycle());
  EXPECT_FALSE(testing::triangle(rows({{1, 1, 1}})).graph.is_tree());
}

TEST(Normalize, DividesBySum) {
  Instance inst = testing::make_instance({"a", "b", "c", "d"}, {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "d"}},
                                         rows({{1, 2, 3}}), Variant::GC);
  EXPECT_EQ(inst.utility(0, 0), q(1, 6));
  EXPECT_EQ(inst.utility(0, 1), q(2, 6));
  EXPECT_EQ(inst.utility(0, 2), q(3, 6));
  EXPECT_TRUE(is_normalized(inst));
}

TEST(Normalize, LeavesNormalizedUnchanged) {
  Instance inst = testing::path3({{q(1, 2), q(1, 2)}});
  EXPECT_EQ(normalize(inst).utilities, inst.utilities);
}

TEST(Normalize, RejectsAllZeroAgent) {
  Instance inst;
  inst.graph = Graph({"a", "b", "c"}, {{"e1", "a", "b"}, {"e2", "b", "c"}});
  inst.agents = {"z"};
  inst.utilities = rows({{0, 0}});
  EXPECT_THROW(normalize(inst), AllZeroAgent);
}

TEST(PieceUtility, SumsLengthTimesUtility) {
  Instance one = testing::path3({{q(1, 2), q(1, 2)}});
  EXPECT_EQ(piece_utility(0, Piece{{whole_edge(0)}}, one), q(1, 2));
  EXPECT_EQ(piece_utility(0, Piece{{whole_edge(0), whole_edge(1)}}, one), q(1));

  Instance two = testing::path3({{q(1, 3), q(2, 3)}});
  Piece p{{part(0, 0, q(1, 2)), part(1, q(1, 2), 1)}};
  EXPECT_EQ(piece_utility(0, p, two), q(1, 6) + q(1, 3));
}

TEST(PieceUtility, IgnoresClosureFlags) {
  Instance inst = testing::path3({{q(1, 3), q(2, 3)}});
  EXPECT_EQ(piece_utility(0, Piece{{part(1, q(1, 4), q(3, 4), false, false)}}, inst),
            piece_utility(0, Piece{{part(1, q(1, 4), q(3, 4))}}, inst));
}

TEST(PieceUtility, RejectsUnknownEdge) {
  Instance inst = testing::path3({{1, 1}});
  EXPECT_THROW(piece_utility(0, Piece{{whole_edge(7)}}, inst), UnknownEdge);
}

TEST(PieceUtility, AdditiveUnderSplitting) {
  testing::Rng rng(11);
  Instance inst = testing::random_tree(rng, 4, 2, Variant::GC);
  for (int trial = 0; trial < 50; ++trial) {
    const EdgeIndex e = testing::uniform(rng, 0, 3);
    Rational lo = q(static_cast<long>(testing::uniform(rng, 0, 6)), 12);
    Rational hi = lo + q(static_cast<long>(testing::uniform(rng, 0, 6)), 12);
    Rational mid = (lo + hi) / 2;
    Piece whole{{part(e, lo, hi)}};
    Piece split{{part(e, lo, mid), part(e, mid, hi, false, true)}};
    EXPECT_EQ(piece_utility(1, whole, inst), piece_utility(1, split, inst));
  }
}

TEST(Connectivity, StarWithTriangleChordIsOnePiece) {
  const Graph g = testing::hub_graph();
  auto id = [&](const char* name) { return *g.find_edge(name); };
  Piece joined{{part(id("v1v2"), 0, q(1, 2)), part(id("v1v3"), 0, 1), part(id("v1v4"), 0, 1),
              part(id("v1v5"), 0, q(5, 6)), part(id("v3v4"), 0, 1)}};
  EXPECT_TRUE(is_connected_piece(joined, g));
}

TEST(Connectivity, GappedOrFarApartPartsAreNotPieces) {
  const Graph g = testing::hub_graph();
  auto id = [&](const char* name) { return *g.find_edge(name); };
  Piece gapped{{part(id("v2v3"), 0, q(1, 2)), part(id("v2v3"), q(3, 4), 1)}};
  EXPECT_FALSE(is_connected_piece(gapped, g));
  Piece apart{{part(id("v1v5"), q(5, 6), 1), part(id("v1v6"), q(1, 2), q(3, 4))}};
  EXPECT_FALSE(is_connected_piece(apart, g));
}

TEST(Connectivity, NonAdjacentEdges) {
  Graph g({"a", "b", "c", "d"}, {{"e", "a", "b"}, {"m", "b", "c"}, {"f", "c", "d"}});
  EXPECT_FALSE(is_connected_piece(Piece{{part(0, 0, q(1, 3)), part(2, q(2, 3), 1)}}, g));
}

TEST(Connectivity, TrivialCases) {
  Graph g({"a", "b"}, {{"e", "a", "b"}});
  EXPECT_TRUE(is_connected_piece(Piece{}, g));
  EXPECT_TRUE(is_connected_piece(Piece{{part(0, q(1, 3), q(1, 2))}}, g));
}

TEST(Connectivity, OpenBoundaryAtSharedVertexDisconnects) {
  const Graph g = testing::path3({{1, 1}}).graph;
  EXPECT_TRUE(is_connected_piece(Piece{{part(0, q(1, 2), 1), part(1, 0, q(1, 2))}}, g));
  EXPECT_FALSE(is_connected_piece(Piece{{part(0, q(1, 2), 1, true, false), part(1, 0, q(1, 2))}}, g));
}

TEST(Connectivity, ZeroLengthBridge) {
  const Graph g = testing::path3({{1, 1}}).graph;
  EXPECT_TRUE(is_connected_piece(Piece{{part(0, 1, 1), part(1, 0, q(1, 2))}}, g));
}

TEST(Verify, SymmetricHalvesAreValid) {
  Instance inst = testing::single_edge(rows({{1}, {1}}));
  Assignment a{{Piece{{part(0, 0, q(1, 2))}}, Piece{{part(0, q(1, 2), 1, false, true)}}}};
  EXPECT_TRUE(verify_assignment(inst, a).valid());
}

TEST(Verify, StarSplitTwoAgainstOneIsEnvious) {
  Instance inst = testing::star3_identical();
  Assignment a{{Piece{{whole_edge(0), whole_edge(1)}}, Piece{{whole_edge(2)}}}};
  const VerificationReport r = verify_assignment(inst, a);
  EXPECT_TRUE(r.failed(CheckKind::EnvyFreeness));
  EXPECT_FALSE(r.failed(CheckKind::Tiling));
  EXPECT_FALSE(r.failed(CheckKind::Connectivity));
}

TEST(Verify, SharedVertexBreaksVertexDisjointness) {
  Instance inst = testing::path3(rows({{1, 0}, {0, 1}}), Variant::VDGC);
  Assignment a{{Piece{{whole_edge(0)}}, Piece{{whole_edge(1)}}}};
  EXPECT_TRUE(verify_assignment(inst, a).failed(CheckKind::VertexDisjointness));
  inst.variant = Variant::GC;
  EXPECT_TRUE(verify_assignment(inst, a).valid());
}

TEST(Verify, DetectsTilingGapsAndOverlaps) {
  Instance inst = testing::single_edge(rows({{1}, {1}}));
  Assignment gap{{Piece{{part(0, 0, q(1, 3))}}, Piece{{part(0, q(1, 2), 1)}}}};
  EXPECT_TRUE(verify_assignment(inst, gap).failed(CheckKind::Tiling));
  Assignment overlap{{Piece{{part(0, 0, q(2, 3))}}, Piece{{part(0, q(1, 2), 1)}}}};
  EXPECT_TRUE(verify_assignment(inst, overlap).failed(CheckKind::Tiling));
}

TEST(Verify, DetectsDisconnectedPiece) {
  Instance inst = testing::single_edge(rows({{1}, {1}, {1}}));
  Assignment a{{Piece{{part(0, 0, q(1, 6)), part(0, q(2, 3), q(5, 6), false, true)}},
                Piece{{part(0, q(1, 6), q(2, 3), false, true)}},
                Piece{{part(0, q(5, 6), 1, false, true)}}}};
  EXPECT_TRUE(verify_assignment(inst, a).failed(CheckKind::Connectivity));
}

TEST(Verify, DetectsWrongShape) {
  Instance inst = testing::single_edge(rows({{1}, {1}}));
  Assignment a{{Piece{{whole_edge(0)}}}};
  EXPECT_TRUE(verify_assignment(inst, a).failed(CheckKind::Shape));
}

TEST(Verify, SinglePieceLengthsAgreeCheck) {
  Assignment equal{{Piece{{part(0, 0, q(1, 3))}}, Piece{{part(0, q(1, 3), q(2, 3), false, true)}}}};
  EXPECT_TRUE(single_piece_lengths_agree(equal));
  Assignment unequal{{Piece{{part(0, 0, q(1, 4))}}, Piece{{part(0, q(1, 4), 1, false, true)}}}};
  EXPECT_FALSE(single_piece_lengths_agree(unequal));
}

}  // namespace
}  // namespace efgc
