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

#include <random>

#include "arrangement_oracle.hpp"
#include "efgc/arrangement.hpp"
#include "efgc/branch_guess.hpp"
#include "efgc/errors.hpp"
#include "efgc/portfolio.hpp"
#include "fixtures.hpp"

namespace efgc {
namespace {

using testing::box;
using testing::q;
using testing::sign_set;

LinearForm line(long a, long b, long c) {
  LinearForm f{Rational(c)};
  f.add_term(0, a);
  f.add_term(1, b);
  return f;
}

const CellMethod kMethods[] = {CellMethod::Auto, CellMethod::Bfs, CellMethod::Sweep, CellMethod::Incremental};

std::size_t full_dimensional(const std::vector<CellWitness>& cells) {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const CellWitness& c) {
    return std::find(c.sign.begin(), c.sign.end(), 0) == c.sign.end();
  }));
}

TEST(SignConditions, SingleFormOnInterval) {
  const LinearSystem region = box(1, 1);
  for (CellMethod m : kMethods) {
    auto cells = enumerate_sign_conditions({LinearForm::variable(0)}, region, m);
    EXPECT_EQ(sign_set(cells), (std::set<SignVector>{{-1}, {0}, {1}}));
  }
}

TEST(SignConditions, TwoAxesOnSquare) {
  const LinearSystem region = box(2, 1);
  for (CellMethod m : kMethods) {
    EXPECT_EQ(enumerate_sign_conditions({LinearForm::variable(0), LinearForm::variable(1)}, region, m).size(), 9u);
  }
}

TEST(SignConditions, ThreeCrossingLinesMatchPlanarWalk) {
  const std::vector<LinearForm> lines = {line(1, 0, 0), line(0, 1, 0), line(1, 1, -1)};
  const LinearSystem region = box(2, 100);
  const auto expected = testing::planar_sign_vectors(lines, region);
  for (CellMethod m : kMethods) {
    const auto cells = enumerate_sign_conditions(lines, region, m);
    EXPECT_EQ(sign_set(cells), expected);
    EXPECT_EQ(full_dimensional(cells), 7u);
  }
  EXPECT_EQ(expected.size(), 19u);
}

TEST(SignConditions, WitnessesReproduceTheirSigns) {
  const std::vector<LinearForm> lines = {line(2, -1, 1), line(1, 3, -2), line(-1, 1, 0), line(1, 1, 1)};
  const LinearSystem region = box(2, 50);
  for (CellMethod m : kMethods) {
    for (const auto& cell : enumerate_sign_conditions(lines, region, m)) {
      EXPECT_EQ(sign_vector(lines, cell.point), cell.sign);
      EXPECT_TRUE(region.satisfied_by(cell.point));
    }
  }
}

TEST(SignConditions, GenericLinesGiveQuadraticFaceCount) {
  std::mt19937_64 rng(3);
  auto r = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (std::size_t s = 2; s <= 4; ++s) {
    // Draw until no two lines are parallel and no three are concurrent.
    std::vector<LinearForm> lines;
    for (;;) {
      lines.clear();
      for (std::size_t i = 0; i < s; ++i) lines.push_back(line(r(-5, 5), r(-5, 5), r(-5, 5)));
      const auto walk = testing::planar_sign_vectors(lines, box(2, 1000));
      std::size_t vertices = 0;
      for (const auto& v : walk) vertices += std::count(v.begin(), v.end(), 0) == 2;
      bool parallel = false;
      for (std::size_t i = 0; i < s; ++i) {
        if (lines[i].coefficient(0) == 0 && lines[i].coefficient(1) == 0) parallel = true;
        for (std::size_t j = i + 1; j < s; ++j) {
          if (lines[i].coefficient(0) * lines[j].coefficient(1) == lines[i].coefficient(1) * lines[j].coefficient(0)) {
            parallel = true;
          }
        }
      }
      if (!parallel && vertices == s * (s - 1) / 2) break;
    }
    const auto cells = enumerate_sign_conditions(lines, box(2, 1000));
    EXPECT_EQ(full_dimensional(cells), 1 + s + s * (s - 1) / 2);
    EXPECT_EQ(sign_set(cells), testing::planar_sign_vectors(lines, box(2, 1000)));
  }
}

TEST(SignConditions, ParallelAndRepeatedLines) {
  // x, 2x - 2 (parallel) and -x (a negated duplicate of the first).
  const std::vector<LinearForm> lines = {line(1, 0, 0), line(2, 0, -2), line(-1, 0, 0), line(0, 1, 0)};
  const LinearSystem region = box(2, 10);
  const auto expected = testing::planar_sign_vectors(lines, region);
  for (CellMethod m : kMethods) EXPECT_EQ(sign_set(enumerate_sign_conditions(lines, region, m)), expected);
}

TEST(SignConditions, ConstantFormsKeepTheirSign) {
  const std::vector<LinearForm> forms = {LinearForm(q(3)), LinearForm::variable(0), LinearForm(q(-1)), LinearForm()};
  const auto cells = enumerate_sign_conditions(forms, box(1, 1));
  ASSERT_EQ(cells.size(), 3u);
  for (const auto& c : cells) {
    EXPECT_EQ(c.sign[0], 1);
    EXPECT_EQ(c.sign[2], -1);
    EXPECT_EQ(c.sign[3], 0);
  }
}

TEST(SignConditions, EmptyRegionThrows) {
  LinearSystem region = box(1, 1);
  region.add(LinearForm::variable(0) - LinearForm(q(5)), Relation::Ge);
  EXPECT_THROW(enumerate_sign_conditions({LinearForm::variable(0)}, region), EmptyRegion);
}

TEST(SignConditions, LowerDimensionalRegion) {
  LinearSystem region = box(2, 4);
  region.add(LinearForm::variable(0) - LinearForm::variable(1), Relation::Eq);
  const std::vector<LinearForm> lines = {line(1, 0, 0), line(0, 1, -1)};
  // Along the diagonal x = y every cell is met by a sample on a fine grid.
  std::set<SignVector> expected;
  for (int num = -40; num <= 40; ++num) {
    const Rational t(num, 10);
    expected.insert(sign_vector(lines, {t, t}));
  }
  for (CellMethod m : kMethods) EXPECT_EQ(sign_set(enumerate_sign_conditions(lines, region, m)), expected);
}

TEST(SignConditions, AddingAFormNeverLosesCells) {
  std::mt19937_64 rng(9);
  auto r = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<LinearForm> forms;
    for (int i = 0; i < 4; ++i) forms.push_back(line(r(-3, 3), r(-3, 3), r(-3, 3)));
    const LinearSystem region = box(2, 20);
    const auto before = sign_set(enumerate_sign_conditions(forms, region));
    forms.push_back(line(r(-3, 3), r(-3, 3), r(-3, 3)));
    std::set<SignVector> projected;
    for (auto s : sign_set(enumerate_sign_conditions(forms, region))) {
      s.pop_back();
      projected.insert(s);
    }
    EXPECT_EQ(projected, before);
    EXPECT_GE(enumerate_sign_conditions(forms, region).size(), before.size());
  }
}

TEST(Dedupe, MergesScaledAndNegatedForms) {
  const auto d = dedupe_forms({line(2, 4, 6), line(-1, -2, -3), line(1, 2, 3), line(0, 0, 5)});
  ASSERT_EQ(d.unique.size(), 1u);
  EXPECT_EQ(d.orientation, (std::vector<int>{1, -1, 1, 1}));
  EXPECT_EQ(d.index[0], d.index[1]);
  EXPECT_EQ(d.index[3], static_cast<std::size_t>(-1));
}

// Path v1 - v2 - v3; agent a holds (e1, 0), agent b holds everything else at
// the endpoints; pool agents p1 = (1, 0), p2 = (0, 1); one agent inside e2.
struct PathGuess {
  Instance inst = testing::make_instance({"v1", "v2", "v3"}, {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}},
                                         testing::rows({{1, 1}, {1, 1}, {1, 0}, {0, 1}}), Variant::GC);
  BranchGuess guess;
  PathGuess() {
    guess.endpoint_agent = {0, 1, 1, 1};
    guess.inside_count = {0, 1};
  }
};

TEST(OrderingForms, IdenticalPoolGivesNoForms) {
  Instance inst = testing::single_edge(testing::rows({{1}, {1}, {1}}));
  BranchGuess g;
  g.endpoint_agent = {0, 0};
  g.inside_count = {2};
  EXPECT_TRUE(build_ordering_forms(inst, g).empty());
}

TEST(OrderingForms, HandExpandedForm) {
  PathGuess p;
  const auto forms = build_ordering_forms(p.inst, p.guess);
  const LinearForm expected = LinearForm::variable(x_var(0, 0));
  bool found = false;
  for (const auto& f : forms) found = found || f == expected || f == -expected;
  EXPECT_TRUE(found);
  for (const auto& f : forms) EXPECT_FALSE(f.is_zero());
}

TEST(Portfolio, PositiveHeldValueRanksFirst) {
  PathGuess p;
  Point point(6, q(0));
  point[x_var(0, 0)] = q(1, 2);
  point[x_var(0, 1)] = q(1, 2);
  point[delta_var(1)] = q(1);
  const CellWitness w{sign_vector(build_ordering_forms(p.inst, p.guess), point), point};
  const auto portfolio = portfolio_from_witness(p.inst, p.guess, w);
  const WeakOrder& order = portfolio.at({1, 0});
  ASSERT_EQ(order.size(), 2u);
  EXPECT_EQ(order[0], std::vector<AgentIndex>{2});
  EXPECT_EQ(order[1], std::vector<AgentIndex>{3});
}

TEST(Portfolio, ZeroHeldValueTies) {
  PathGuess p;
  Point point(6, q(0));
  point[delta_var(1)] = q(1);
  point[x_var(0, 1)] = q(1);
  const CellWitness w{sign_vector(build_ordering_forms(p.inst, p.guess), point), point};
  // a holds nothing of value to either pool agent: one tie class.
  EXPECT_EQ(portfolio_from_witness(p.inst, p.guess, w).at({1, 0}).size(), 1u);
}

TEST(Portfolio, SymmetricPoolIsOneTieClass) {
  Instance inst = testing::single_edge(testing::rows({{1}, {1}, {1}}));
  BranchGuess g;
  g.endpoint_agent = {0, 0};
  g.inside_count = {2};
  Point point{q(1, 4), q(1, 4), q(1, 4)};
  const auto portfolio = portfolio_from_witness(inst, g, CellWitness{{}, point});
  ASSERT_EQ(portfolio.size(), 1u);
  EXPECT_EQ(portfolio.begin()->second.size(), 1u);
}

TEST(Portfolio, OrderMatchesWitnessSigns) {
  // Property: for every cell of the ordering forms, two pool agents tie in
  // the (e, a) order exactly when their cross-multiplied form is zero.
  PathGuess p;
  LinearSystem region = length_variables(p.inst.graph);
  for (VariableId v = 0; v < region.variable_count(); ++v) region.add(LinearForm::variable(v), Relation::Ge);
  for (EdgeIndex e = 0; e < 2; ++e) {
    region.add(LinearForm(q(1)) - LinearForm::variable(x_var(e, 0)) -
                   LinearForm::variable(delta_var(e), p.guess.inside_count[e]) - LinearForm::variable(x_var(e, 1)),
               Relation::Eq);
  }
  const auto forms = build_ordering_forms(p.inst, p.guess);
  for (const auto& cell : enumerate_sign_conditions(forms, region)) {
    const auto order = portfolio_from_witness(p.inst, p.guess, cell).at({1, 0});
    const LinearForm s2 = held_value_form(p.inst, p.guess, 0, 2);
    const LinearForm s3 = held_value_form(p.inst, p.guess, 0, 3);
    const bool tie = order.size() == 1;
    const bool both_zero = s2.evaluate(cell.point) == 0 && s3.evaluate(cell.point) == 0;
    EXPECT_EQ(tie, both_zero);
  }
}

}  // namespace
}  // namespace efgc
