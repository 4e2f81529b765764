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

#include "efgc/few_edges.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "efgc/errors.hpp"
#include "efgc/matching.hpp"
#include "efgc/parallel.hpp"
#include "efgc/portfolio.hpp"
#include "efgc/verify.hpp"
#include "layout.hpp"

namespace efgc {

bool passes_sanity_checks(const Instance& instance, const BranchGuess& guess) {
  const Graph& g = instance.graph;
  const std::size_t m = instance.agent_count();
  const auto holders = guess.endpoint_agents(m);
  const std::size_t inside = std::accumulate(guess.inside_count.begin(), guess.inside_count.end(), std::size_t{0});
  if (holders.size() + inside != m) return false;

  for (AgentIndex a : holders) {
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (guess.inside_count[e] == 0 && guess.endpoint(e, 0) == a && guess.endpoint(e, 1) == a) {
        parent[find(g.endpoint(e, 0))] = find(g.endpoint(e, 1));
      }
    }
    std::optional<std::size_t> root;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      for (int end = 0; end < 2; ++end) {
        if (guess.endpoint(e, end) != a) continue;
        const std::size_t r = find(g.endpoint(e, end));
        if (root && *root != r) return false;
        root = r;
      }
    }
  }

  if (instance.variant == Variant::VDGC) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      std::optional<AgentIndex> owner;
      for (EdgeIndex e : g.incident(v)) {
        const AgentIndex a = guess.endpoint(e, g.coordinate_of(e, v));
        if (owner && *owner != a) return false;
        owner = a;
      }
    }
  }
  return true;
}

namespace {

// All count vectors of length k with entries summing to `total`, in
// lexicographic order.
void for_each_count_vector(std::size_t k, std::size_t total,
                           const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> n(k, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == k) {
      if (left == 0) fn(n);
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      n[i] = c;
      rec(i + 1, left - c);
    }
    n[i] = 0;
  };
  rec(0, total);
}

std::vector<std::vector<AgentIndex>> endpoint_maps(const Instance& instance) {
  const Graph& g = instance.graph;
  const std::size_t m = instance.agent_count();
  std::vector<std::vector<AgentIndex>> maps;
  if (m == 0) return maps;
  if (instance.variant == Variant::VDGC) {
    std::vector<AgentIndex> owner(g.vertex_count(), 0);
    for (;;) {
      std::vector<AgentIndex> map(2 * g.edge_count());
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        map[2 * e] = owner[g.endpoint(e, 0)];
        map[2 * e + 1] = owner[g.endpoint(e, 1)];
      }
      maps.push_back(std::move(map));
      std::size_t i = owner.size();
      while (i > 0 && owner[i - 1] + 1 == m) owner[--i] = 0;
      if (i == 0) break;
      ++owner[i - 1];
    }
    std::sort(maps.begin(), maps.end());
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
    return maps;
  }
  std::vector<AgentIndex> map(2 * g.edge_count(), 0);
  for (;;) {
    maps.push_back(map);
    std::size_t i = map.size();
    while (i > 0 && map[i - 1] + 1 == m) map[--i] = 0;
    if (i == 0) break;
    ++map[i - 1];
  }
  return maps;
}

}  // namespace

std::vector<BranchGuess> enumerate_initial_branches(const Instance& instance) {
  const std::size_t m = instance.agent_count();
  std::vector<BranchGuess> out;
  for (auto& map : endpoint_maps(instance)) {
    BranchGuess guess;
    guess.endpoint_agent = std::move(map);
    const std::size_t holders = guess.endpoint_agents(m).size();
    if (holders > m) continue;
    for_each_count_vector(instance.edge_count(), m - holders, [&](const std::vector<std::size_t>& n) {
      guess.inside_count = n;
      if (passes_sanity_checks(instance, guess)) out.push_back(guess);
    });
  }
  return out;
}

LinearSystem build_base_lp(const Instance& instance, const BranchGuess& guess) {
  const std::size_t k = instance.edge_count();
  LinearSystem s = length_variables(instance.graph);
  for (EdgeIndex e = 0; e < k; ++e) {
    s.add(LinearForm::variable(x_var(e, 0)), Relation::Ge);
    s.add(LinearForm::variable(delta_var(e)), Relation::Ge);
    s.add(LinearForm::variable(x_var(e, 1)), Relation::Ge);
  }
  for (EdgeIndex e = 0; e < k; ++e) {
    LinearForm sum(-1);
    sum.add_term(x_var(e, 0), 1);
    sum.add_term(delta_var(e), Rational(static_cast<unsigned long>(guess.inside_count[e])));
    sum.add_term(x_var(e, 1), 1);
    s.add(std::move(sum), Relation::Eq);
  }
  const auto holders = guess.endpoint_agents(instance.agent_count());
  for (AgentIndex a : holders) {
    const LinearForm own = held_value_form(instance, guess, a, a);
    for (AgentIndex b : holders) {
      if (b != a) s.add(own - held_value_form(instance, guess, b, a), Relation::Ge);
    }
    for (EdgeIndex e = 0; e < k; ++e) {
      s.add(own - LinearForm::variable(delta_var(e), instance.utility(a, e)), Relation::Ge);
    }
  }
  return s;
}

namespace {

void add_pair_constraints(const Instance& instance, const BranchGuess& guess, LinearSystem& s) {
  for (const auto& [ef, b] : guess.pair_critical) {
    const auto [e, f] = ef;
    s.add(LinearForm::variable(delta_var(e), instance.utility(b, e)) -
              LinearForm::variable(delta_var(f), instance.utility(b, f)),
          Relation::Ge);
  }
}

void add_vertex_constraints(const Instance& instance, const BranchGuess& guess, LinearSystem& s) {
  const auto pool = guess.pool(instance.agent_count());
  for (const auto& [ea, alpha] : guess.vertex_critical) {
    const auto [e, a] = ea;
    const Rational s_alpha = held_value_form(instance, guess, a, alpha).evaluate(guess.sample_point);
    for (AgentIndex b : pool) {
      const LinearForm held = held_value_form(instance, guess, a, b);
      if (!envy_ratio_le(held.evaluate(guess.sample_point), instance.utility(b, e), s_alpha,
                         instance.utility(alpha, e))) {
        continue;
      }
      s.add(LinearForm::variable(delta_var(e), instance.utility(b, e)) - held, Relation::Ge);
    }
  }
}

}  // namespace

LinearSystem build_lp(const Instance& instance, const BranchGuess& guess) {
  LinearSystem s = build_base_lp(instance, guess);
  add_pair_constraints(instance, guess, s);
  add_vertex_constraints(instance, guess, s);
  return s;
}

Extraction extract_assignment(const Instance& instance, const BranchGuess& guess,
                              const LengthSolution& lengths) {
  const std::size_t m = instance.agent_count();
  const std::size_t k = instance.edge_count();
  for (EdgeIndex e = 0; e < k; ++e) {
    if (lengths.x0[e] < 0 || lengths.delta[e] < 0 || lengths.x1[e] < 0) {
      throw InconsistentLengths("negative length on edge '" + instance.graph.edge(e).id + "'");
    }
    const Rational n(static_cast<unsigned long>(guess.inside_count[e]));
    if (lengths.x0[e] + n * lengths.delta[e] + lengths.x1[e] != 1) {
      throw InconsistentLengths("lengths on edge '" + instance.graph.edge(e).id + "' do not sum to 1");
    }
  }

  // Slots get placeholder agent ids m, m + 1, ...
  std::vector<EdgeIndex> slot_edge;
  for (EdgeIndex e = 0; e < k; ++e) {
    for (std::size_t i = 0; i < guess.inside_count[e]; ++i) slot_edge.push_back(e);
  }
  std::vector<Piece> pieces(m + slot_edge.size());
  std::size_t next_slot = m;
  for (EdgeIndex e = 0; e < k; ++e) {
    std::vector<detail::Segment> segments;
    segments.push_back({guess.endpoint(e, 0), lengths.x0[e], true});
    for (std::size_t i = 0; i < guess.inside_count[e]; ++i) segments.push_back({next_slot++, lengths.delta[e], false});
    segments.push_back({guess.endpoint(e, 1), lengths.x1[e], true});
    detail::add_to_pieces(detail::lay_out_edge(e, segments), pieces);
  }

  Extraction out;
  out.partial.pieces.assign(pieces.begin(), pieces.begin() + static_cast<std::ptrdiff_t>(m));
  for (AgentIndex a : guess.endpoint_agents(m)) out.full_partition.push_back(pieces[a]);
  for (std::size_t s = 0; s < slot_edge.size(); ++s) out.full_partition.push_back(pieces[m + s]);

  std::vector<std::set<AgentIndex>> guessed(k);
  for (const auto& [ef, b] : guess.pair_critical) guessed[ef.first].insert(b);
  for (const auto& [ea, b] : guess.vertex_critical) guessed[ea.first].insert(b);
  std::vector<bool> slot_taken(slot_edge.size(), false);
  std::vector<bool> is_pinned(m, false);
  for (EdgeIndex e = 0; e < k; ++e) {
    for (AgentIndex b : guessed[e]) {
      std::size_t s = 0;
      while (s < slot_edge.size() && (slot_edge[s] != e || slot_taken[s])) ++s;
      if (s == slot_edge.size()) throw InconsistentLengths("more critical agents than slots on an edge");
      slot_taken[s] = true;
      out.partial.pieces[b] = pieces[m + s];
      out.pinned.push_back(b);
      is_pinned[b] = true;
    }
  }
  for (std::size_t s = 0; s < slot_edge.size(); ++s) {
    if (!slot_taken[s]) out.leftover.push_back(pieces[m + s]);
  }
  for (AgentIndex b : guess.pool(m)) {
    if (!is_pinned[b]) out.unassigned.push_back(b);
  }
  return out;
}

namespace {

struct Counters {
  std::atomic<std::size_t> branches{0};
  std::atomic<std::size_t> lp_calls{0};
};

class FewEdgesSearch {
 public:
  FewEdgesSearch(const Instance& instance, BranchGuess guess, Counters& counters)
      : inst_(instance), guess_(std::move(guess)), counters_(counters) {
    m_ = inst_.agent_count();
    k_ = inst_.edge_count();
    holders_ = guess_.endpoint_agents(m_);
    pool_ = guess_.pool(m_);
    for (EdgeIndex e = 0; e < k_; ++e) {
      if (guess_.inside_count[e] == 0) continue;
      for (EdgeIndex f = 0; f < k_; ++f) {
        if (f != e && guess_.inside_count[f] > 0) pair_keys_.emplace_back(e, f);
      }
      for (AgentIndex a : holders_) vertex_keys_.emplace_back(e, a);
    }
    edge_of_.assign(m_, kNoEdge);
    guessed_on_.assign(k_, {});
  }

  std::optional<Assignment> run() {
    counters_.branches.fetch_add(1, std::memory_order_relaxed);
    base_ = build_base_lp(inst_, guess_);
    Feasibility f = feasible(base_);
    if (!f) return std::nullopt;
    if (pool_.empty()) return finish(f.witness);
    return pair_step(0);
  }

 private:
  static constexpr EdgeIndex kNoEdge = static_cast<EdgeIndex>(-1);

  const Instance& inst_;
  BranchGuess guess_;
  Counters& counters_;
  std::size_t m_ = 0;
  std::size_t k_ = 0;
  std::vector<AgentIndex> holders_;
  std::vector<AgentIndex> pool_;
  std::vector<std::pair<EdgeIndex, EdgeIndex>> pair_keys_;
  std::vector<std::pair<EdgeIndex, AgentIndex>> vertex_keys_;
  LinearSystem base_;
  LinearSystem with_pairs_;
  std::optional<std::vector<Point>> samples_;
  // Edge an agent has been guessed inside, and the guessed agents per edge
  // with multiplicity.
  std::vector<EdgeIndex> edge_of_;
  std::vector<std::multiset<AgentIndex>> guessed_on_;

  Feasibility feasible(const LinearSystem& s) {
    counters_.lp_calls.fetch_add(1, std::memory_order_relaxed);
    return lp_feasible(s);
  }

  bool can_guess(AgentIndex b, EdgeIndex e) const {
    if (edge_of_[b] != kNoEdge) return edge_of_[b] == e;
    std::set<AgentIndex> distinct(guessed_on_[e].begin(), guessed_on_[e].end());
    return distinct.size() < guess_.inside_count[e];
  }

  void push_guess(AgentIndex b, EdgeIndex e) {
    guessed_on_[e].insert(b);
    edge_of_[b] = e;
  }

  void pop_guess(AgentIndex b, EdgeIndex e) {
    guessed_on_[e].erase(guessed_on_[e].find(b));
    if (guessed_on_[e].count(b) == 0) edge_of_[b] = kNoEdge;
  }

  // Every agent guessed on e has edge ratio u(e)/u(f) at least that of the
  // pair-critical agent for (e, f).
  bool ratios_consistent() const {
    for (const auto& [ef, critical] : guess_.pair_critical) {
      const auto [e, f] = ef;
      for (AgentIndex b : guessed_on_[e]) {
        if (!edge_ratio_ge(inst_, b, critical, e, f)) return false;
      }
    }
    return true;
  }

  // Every agent guessed on e envies endpoint agent a at most as much as the
  // vertex-critical agent for (e, a).
  bool envy_order_consistent() const {
    for (const auto& [ea, alpha] : guess_.vertex_critical) {
      const auto [e, a] = ea;
      const Rational s_alpha = held_value_form(inst_, guess_, a, alpha).evaluate(guess_.sample_point);
      for (AgentIndex b : guessed_on_[e]) {
        const Rational s_b = held_value_form(inst_, guess_, a, b).evaluate(guess_.sample_point);
        if (!envy_ratio_le(s_b, inst_.utility(b, e), s_alpha, inst_.utility(alpha, e))) return false;
      }
    }
    return true;
  }

  std::optional<Assignment> pair_step(std::size_t i) {
    if (i == pair_keys_.size()) {
      if (!ratios_consistent()) return std::nullopt;
      with_pairs_ = base_;
      add_pair_constraints(inst_, guess_, with_pairs_);
      if (!pair_keys_.empty() && !feasible(with_pairs_)) return std::nullopt;
      for (const Point& y : samples()) {
        guess_.sample_point = y;
        if (auto r = vertex_step(0)) return r;
      }
      guess_.sample_point.clear();
      return std::nullopt;
    }
    const auto [e, f] = pair_keys_[i];
    for (AgentIndex b : pool_) {
      if (!can_guess(b, e)) continue;
      guess_.pair_critical[{e, f}] = b;
      push_guess(b, e);
      auto r = pair_step(i + 1);
      pop_guess(b, e);
      if (r) return r;
    }
    guess_.pair_critical.erase({e, f});
    return std::nullopt;
  }

  const std::vector<Point>& samples() {
    if (!samples_) {
      samples_.emplace();
      for (auto& cell : enumerate_sign_conditions(build_ordering_forms(inst_, guess_), base_)) {
        samples_->push_back(std::move(cell.point));
      }
    }
    return *samples_;
  }

  std::optional<Assignment> vertex_step(std::size_t i) {
    if (i == vertex_keys_.size()) {
      if (!ratios_consistent() || !envy_order_consistent()) return std::nullopt;
      counters_.branches.fetch_add(1, std::memory_order_relaxed);
      LinearSystem s = with_pairs_;
      add_vertex_constraints(inst_, guess_, s);
      Feasibility f = feasible(s);
      if (!f) return std::nullopt;
      return finish(f.witness);
    }
    const auto [e, a] = vertex_keys_[i];
    for (AgentIndex b : pool_) {
      if (!can_guess(b, e)) continue;
      guess_.vertex_critical[{e, a}] = b;
      push_guess(b, e);
      auto r = vertex_step(i + 1);
      pop_guess(b, e);
      if (r) return r;
    }
    guess_.vertex_critical.erase({e, a});
    return std::nullopt;
  }

  std::optional<Assignment> finish(const Point& witness) {
    Extraction ex = extract_assignment(inst_, guess_, LengthSolution::from_point(witness, k_));
    for (AgentIndex b : ex.pinned) {
      const Rational own = piece_utility(b, ex.partial.pieces[b], inst_);
      for (const auto& q : ex.full_partition) {
        if (piece_utility(b, q, inst_) > own) return std::nullopt;
      }
    }
    const Bigraph h = compatibility_graph(inst_, ex.full_partition, ex.unassigned, ex.leftover);
    const Matching match = max_bipartite_matching(h);
    if (!match.perfect(h)) return std::nullopt;
    Assignment assignment = std::move(ex.partial);
    for (std::size_t i = 0; i < h.left.size(); ++i) assignment.pieces[h.left[i]] = ex.leftover[match.partner[i]];
    const VerificationReport report = verify_assignment(inst_, assignment);
    if (!report.valid()) {
      throw std::logic_error("few-edges solver built an invalid assignment: " + report.to_text());
    }
    return assignment;
  }
};

}  // namespace

Verdict solve_few_edges(const Instance& instance) {
  const std::vector<BranchGuess> branches = enumerate_initial_branches(instance);
  Counters counters;
  std::function<std::optional<Assignment>(std::size_t)> fn = [&](std::size_t i) {
    return FewEdgesSearch(instance, branches[i], counters).run();
  };
  auto found = first_accepting(branches.size(), fn);
  Verdict v;
  v.stats.branches = counters.branches.load();
  v.stats.lp_calls = counters.lp_calls.load();
  if (found) {
    v.yes = true;
    v.assignment = std::move(found->second);
  }
  return v;
}

}  // namespace efgc
