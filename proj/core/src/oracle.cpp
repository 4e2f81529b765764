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

#include "efgc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "efgc/lp.hpp"
#include "efgc/parallel.hpp"
#include "efgc/verify.hpp"
#include "layout.hpp"

namespace efgc {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

class OracleBranch {
 public:
  OracleBranch(const Instance& instance, std::vector<AgentIndex> ends, std::atomic<std::size_t>& lp_calls)
      : inst_(instance), g_(instance.graph), ends_(std::move(ends)), lp_calls_(lp_calls) {}

  std::optional<Assignment> run() {
    const std::size_t m = inst_.agent_count();
    std::vector<bool> holder(m, false);
    for (AgentIndex a : ends_) holder[a] = true;
    std::vector<AgentIndex> rest;
    for (AgentIndex a = 0; a < m; ++a) {
      if (!holder[a]) rest.push_back(a);
    }
    if (g_.edge_count() == 0) return std::nullopt;
    inside_.assign(m, kNone);
    std::vector<EdgeIndex> place(rest.size(), 0);
    for (;;) {
      for (std::size_t i = 0; i < rest.size(); ++i) inside_[rest[i]] = place[i];
      if (connected_holders()) {
        if (auto r = solve()) return r;
      }
      std::size_t i = place.size();
      while (i > 0 && place[i - 1] + 1 == g_.edge_count()) place[--i] = 0;
      if (i == 0) return std::nullopt;
      ++place[i - 1];
    }
  }

 private:
  const Instance& inst_;
  const Graph& g_;
  std::vector<AgentIndex> ends_;
  std::atomic<std::size_t>& lp_calls_;
  std::vector<EdgeIndex> inside_;

  AgentIndex end_agent(EdgeIndex e, int i) const { return ends_[2 * e + i]; }

  bool occupied(EdgeIndex e) const {
    return std::find(inside_.begin(), inside_.end(), e) != inside_.end();
  }

  // Each endpoint agent's endpoint pieces must be linked through edges it
  // holds entirely.
  bool connected_holders() const {
    for (AgentIndex a = 0; a < inst_.agent_count(); ++a) {
      std::vector<VertexIndex> touched;
      for (EdgeIndex e = 0; e < g_.edge_count(); ++e) {
        for (int i = 0; i < 2; ++i) {
          if (end_agent(e, i) == a) touched.push_back(g_.endpoint(e, i));
        }
      }
      if (touched.empty()) continue;
      std::vector<bool> seen(g_.vertex_count(), false);
      std::vector<VertexIndex> stack{touched.front()};
      seen[touched.front()] = true;
      while (!stack.empty()) {
        const VertexIndex v = stack.back();
        stack.pop_back();
        for (EdgeIndex e : g_.incident(v)) {
          if (occupied(e) || end_agent(e, 0) != a || end_agent(e, 1) != a) continue;
          const VertexIndex w = g_.endpoint(e, 0) == v ? g_.endpoint(e, 1) : g_.endpoint(e, 0);
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      for (VertexIndex v : touched) {
        if (!seen[v]) return false;
      }
    }
    return true;
  }

  std::optional<Assignment> solve() {
    const std::size_t m = inst_.agent_count();
    const std::size_t k = g_.edge_count();
    std::vector<std::size_t> count(k, 0);
    for (AgentIndex a = 0; a < m; ++a) {
      if (inside_[a] != kNone) ++count[inside_[a]];
    }
    LinearSystem lp;
    std::vector<VariableId> x0(k), x1(k), delta(k, kNone);
    for (EdgeIndex e = 0; e < k; ++e) {
      x0[e] = lp.add_variable("x0_" + g_.edge(e).id);
      x1[e] = lp.add_variable("x1_" + g_.edge(e).id);
      lp.add(LinearForm::variable(x0[e]), Relation::Ge);
      lp.add(LinearForm::variable(x1[e]), Relation::Ge);
      LinearForm sum(-1);
      sum.add_term(x0[e], 1).add_term(x1[e], 1);
      if (count[e] > 0) {
        delta[e] = lp.add_variable("delta_" + g_.edge(e).id);
        lp.add(LinearForm::variable(delta[e]), Relation::Ge);
        sum.add_term(delta[e], Rational(static_cast<unsigned long>(count[e])));
      }
      lp.add(std::move(sum), Relation::Eq);
    }
    // worth[b][a]: what agent a thinks the piece of b is worth.
    std::vector<std::vector<LinearForm>> worth(m, std::vector<LinearForm>(m));
    for (AgentIndex b = 0; b < m; ++b) {
      for (AgentIndex a = 0; a < m; ++a) {
        if (inside_[b] != kNone) {
          worth[b][a].add_term(delta[inside_[b]], inst_.utility(a, inside_[b]));
          continue;
        }
        for (EdgeIndex e = 0; e < k; ++e) {
          if (end_agent(e, 0) == b) worth[b][a].add_term(x0[e], inst_.utility(a, e));
          if (end_agent(e, 1) == b) worth[b][a].add_term(x1[e], inst_.utility(a, e));
        }
      }
    }
    for (AgentIndex a = 0; a < m; ++a) {
      for (AgentIndex b = 0; b < m; ++b) {
        if (a != b) lp.add(worth[a][a] - worth[b][a], Relation::Ge);
      }
    }
    lp_calls_.fetch_add(1, std::memory_order_relaxed);
    const Feasibility f = lp_feasible(lp);
    if (!f) return std::nullopt;

    std::vector<Piece> pieces(m);
    for (EdgeIndex e = 0; e < k; ++e) {
      std::vector<detail::Segment> segments;
      segments.push_back({end_agent(e, 0), f.witness[x0[e]], true});
      for (AgentIndex a = 0; a < m; ++a) {
        if (inside_[a] == e) segments.push_back({a, f.witness[delta[e]], false});
      }
      segments.push_back({end_agent(e, 1), f.witness[x1[e]], true});
      detail::add_to_pieces(detail::lay_out_edge(e, segments), pieces);
    }
    Assignment assignment{std::move(pieces)};
    const VerificationReport report = verify_assignment(inst_, assignment);
    if (!report.valid()) throw std::logic_error("oracle built an invalid assignment: " + report.to_text());
    return assignment;
  }
};

std::vector<std::vector<AgentIndex>> oracle_endpoint_maps(const Instance& instance) {
  const Graph& g = instance.graph;
  const std::size_t m = instance.agent_count();
  std::vector<std::vector<AgentIndex>> out;
  if (m == 0) return out;
  if (instance.variant == Variant::VDGC) {
    // One owner per vertex; every endpoint at the vertex goes to it.
    std::vector<AgentIndex> owner(g.vertex_count(), 0);
    for (;;) {
      std::vector<AgentIndex> ends(2 * g.edge_count());
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        for (int i = 0; i < 2; ++i) ends[2 * e + i] = owner[g.endpoint(e, i)];
      }
      out.push_back(std::move(ends));
      std::size_t i = owner.size();
      while (i > 0 && owner[i - 1] + 1 == m) owner[--i] = 0;
      if (i == 0) break;
      ++owner[i - 1];
    }
    return out;
  }
  std::vector<AgentIndex> ends(2 * g.edge_count(), 0);
  for (;;) {
    out.push_back(ends);
    std::size_t i = ends.size();
    while (i > 0 && ends[i - 1] + 1 == m) ends[--i] = 0;
    if (i == 0) break;
    ++ends[i - 1];
  }
  return out;
}

}  // namespace

Verdict solve_explicit_oracle(const Instance& instance) {
  Verdict v;
  if (instance.edge_count() > kOracleMaxEdges || instance.agent_count() > kOracleMaxAgents) {
    v.warnings.push_back("ScaleExceeded: oracle run with " + std::to_string(instance.edge_count()) +
                         " edges and " + std::to_string(instance.agent_count()) + " agents");
  }
  const auto maps = oracle_endpoint_maps(instance);
  std::atomic<std::size_t> lp_calls{0};
  std::function<std::optional<Assignment>(std::size_t)> fn = [&](std::size_t i) {
    return OracleBranch(instance, maps[i], lp_calls).run();
  };
  auto found = first_accepting(maps.size(), fn);
  v.stats.branches = maps.size();
  v.stats.lp_calls = lp_calls.load();
  if (found) {
    v.yes = true;
    v.assignment = std::move(found->second);
  }
  return v;
}

}  // namespace efgc
