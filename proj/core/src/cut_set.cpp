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

#include "efgc/cut_set.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "efgc/errors.hpp"
#include "efgc/lp.hpp"
#include "efgc/parallel.hpp"
#include "efgc/verify.hpp"
#include "layout.hpp"

namespace efgc {
namespace {

struct Counters {
  std::atomic<std::size_t> branches{0};
  std::atomic<std::size_t> lp_calls{0};
};

class CutSearch {
 public:
  CutSearch(const Instance& instance, const std::vector<EdgeIndex>& cut, Counters& counters)
      : inst_(instance), g_(instance.graph), counters_(counters) {
    m_ = inst_.agent_count();
    in_cut_.assign(g_.edge_count(), false);
    for (EdgeIndex e : cut) in_cut_.at(e) = true;
    find_components();
  }

  std::optional<Assignment> run() {
    if (m_ == 0) return std::nullopt;
    std::vector<AgentIndex> owner(comp_vertices_.size(), 0);
    for (;;) {
      if (auto a = try_component_assignment(owner)) return a;
      std::size_t i = owner.size();
      while (i > 0 && owner[i - 1] + 1 == m_) owner[--i] = 0;
      if (i == 0) return std::nullopt;
      ++owner[i - 1];
    }
  }

 private:
  const Instance& inst_;
  const Graph& g_;
  Counters& counters_;
  std::size_t m_ = 0;
  std::vector<bool> in_cut_;
  std::vector<std::size_t> comp_of_;
  std::vector<std::vector<VertexIndex>> comp_vertices_;
  std::vector<std::vector<EdgeIndex>> comp_edges_;

  // Per component assignment.
  std::vector<AgentIndex> owner_;
  std::vector<std::vector<EdgeIndex>> connectors_;
  std::vector<std::vector<bool>> in_t_;
  std::vector<EdgeIndex> free_;
  std::vector<std::optional<EdgeIndex>> inside_;

  void find_components() {
    const std::size_t n = g_.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (EdgeIndex e = 0; e < g_.edge_count(); ++e) {
      if (in_cut_[e]) continue;
      parent[find(g_.edge(e).tail)] = find(g_.edge(e).head);
    }
    std::vector<std::size_t> id(n, static_cast<std::size_t>(-1));
    comp_of_.resize(n);
    for (VertexIndex v = 0; v < n; ++v) {
      const std::size_t r = find(v);
      if (id[r] == static_cast<std::size_t>(-1)) {
        id[r] = comp_vertices_.size();
        comp_vertices_.emplace_back();
        comp_edges_.emplace_back();
      }
      comp_of_[v] = id[r];
      comp_vertices_[id[r]].push_back(v);
    }
    for (EdgeIndex e = 0; e < g_.edge_count(); ++e) {
      if (!in_cut_[e]) comp_edges_[comp_of_[g_.edge(e).tail]].push_back(e);
    }
  }

  bool own_edge(EdgeIndex e, AgentIndex a) const {
    return !in_cut_[e] && owner_[comp_of_[g_.edge(e).tail]] == a;
  }

  bool own_vertex(VertexIndex v, AgentIndex a) const { return owner_[comp_of_[v]] == a; }

  // Cut edges that join the agent's components, one entry per alternative.
  std::vector<std::vector<EdgeIndex>> connector_options(AgentIndex a) const {
    return g_.is_tree() ? tree_connectors(a) : cycle_connectors(a);
  }

  std::vector<std::vector<EdgeIndex>> tree_connectors(AgentIndex a) const {
    const std::size_t n = g_.vertex_count();
    std::vector<bool> alive(g_.edge_count(), true);
    std::vector<std::size_t> degree(n);
    for (VertexIndex v = 0; v < n; ++v) degree[v] = g_.degree(v);
    std::vector<VertexIndex> leaves;
    for (VertexIndex v = 0; v < n; ++v) {
      if (degree[v] == 1 && !own_vertex(v, a)) leaves.push_back(v);
    }
    while (!leaves.empty()) {
      const VertexIndex v = leaves.back();
      leaves.pop_back();
      for (EdgeIndex e : g_.incident(v)) {
        if (!alive[e]) continue;
        alive[e] = false;
        const VertexIndex w = g_.edge(e).tail == v ? g_.edge(e).head : g_.edge(e).tail;
        if (--degree[w] == 1 && !own_vertex(w, a)) leaves.push_back(w);
      }
      degree[v] = 0;
    }
    std::vector<EdgeIndex> connector;
    for (EdgeIndex e = 0; e < g_.edge_count(); ++e) {
      if (!alive[e] || own_edge(e, a)) continue;
      if (!in_cut_[e]) return {};
      connector.push_back(e);
    }
    return {connector};
  }

  std::vector<std::vector<EdgeIndex>> cycle_connectors(AgentIndex a) const {
    // Walk the cycle starting at an own vertex.
    const std::size_t n = g_.vertex_count();
    VertexIndex start = 0;
    while (start < n && !own_vertex(start, a)) ++start;
    std::vector<std::vector<EdgeIndex>> runs;
    std::vector<EdgeIndex> current;
    VertexIndex v = start;
    EdgeIndex prev = static_cast<EdgeIndex>(-1);
    for (std::size_t step = 0; step < n; ++step) {
      const auto& inc = g_.incident(v);
      const EdgeIndex e = inc[0] != prev ? inc[0] : inc[1];
      const VertexIndex w = g_.edge(e).tail == v ? g_.edge(e).head : g_.edge(e).tail;
      if (!own_edge(e, a)) {
        current.push_back(e);
        if (own_vertex(w, a)) runs.push_back(std::exchange(current, {}));
      }
      prev = e;
      v = w;
    }
    std::vector<bool> coverable(runs.size());
    std::size_t blocked = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
      coverable[r] = std::all_of(runs[r].begin(), runs[r].end(), [&](EdgeIndex e) { return in_cut_[e]; });
      if (!coverable[r]) ++blocked;
    }
    std::vector<std::vector<EdgeIndex>> options;
    for (std::size_t skip = 0; skip < runs.size(); ++skip) {
      if (blocked > 1 || (blocked == 1 && coverable[skip])) continue;
      std::vector<EdgeIndex> connector;
      for (std::size_t r = 0; r < runs.size(); ++r) {
        if (r != skip) connector.insert(connector.end(), runs[r].begin(), runs[r].end());
      }
      std::sort(connector.begin(), connector.end());
      options.push_back(std::move(connector));
    }
    return options;
  }

  std::optional<Assignment> try_component_assignment(const std::vector<AgentIndex>& owner) {
    owner_ = owner;
    std::vector<std::size_t> comp_count(m_, 0);
    for (AgentIndex a : owner_) ++comp_count[a];
    std::vector<std::vector<std::vector<EdgeIndex>>> options(m_);
    for (AgentIndex a = 0; a < m_; ++a) {
      options[a] = comp_count[a] >= 2 ? connector_options(a) : std::vector<std::vector<EdgeIndex>>{{}};
      if (options[a].empty()) return std::nullopt;
    }
    std::vector<std::size_t> pick(m_, 0);
    for (;;) {
      if (auto r = try_connectors(options, pick)) return r;
      std::size_t i = m_;
      while (i > 0 && pick[i - 1] + 1 == options[i - 1].size()) pick[--i] = 0;
      if (i == 0) return std::nullopt;
      ++pick[i - 1];
    }
  }

  std::optional<Assignment> try_connectors(const std::vector<std::vector<std::vector<EdgeIndex>>>& options,
                                           const std::vector<std::size_t>& pick) {
    connectors_.assign(m_, {});
    std::vector<bool> used(g_.edge_count(), false);
    for (AgentIndex a = 0; a < m_; ++a) {
      connectors_[a] = options[a][pick[a]];
      for (EdgeIndex e : connectors_[a]) {
        if (used[e]) return std::nullopt;
        used[e] = true;
      }
    }
    in_t_.assign(m_, std::vector<bool>(g_.vertex_count(), false));
    for (VertexIndex v = 0; v < g_.vertex_count(); ++v) in_t_[owner_[comp_of_[v]]][v] = true;
    for (AgentIndex a = 0; a < m_; ++a) {
      for (EdgeIndex e : connectors_[a]) {
        in_t_[a][g_.edge(e).tail] = true;
        in_t_[a][g_.edge(e).head] = true;
      }
    }
    if (inst_.variant == Variant::VDGC) {
      for (VertexIndex v = 0; v < g_.vertex_count(); ++v) {
        std::size_t holders = 0;
        for (AgentIndex a = 0; a < m_; ++a) holders += in_t_[a][v];
        if (holders > 1) return std::nullopt;
      }
    }
    free_.clear();
    for (EdgeIndex e = 0; e < g_.edge_count(); ++e) {
      if (in_cut_[e] && !used[e]) free_.push_back(e);
    }
    std::vector<AgentIndex> homeless;
    std::vector<bool> has_comp(m_, false);
    for (AgentIndex a : owner_) has_comp[a] = true;
    for (AgentIndex a = 0; a < m_; ++a) {
      if (!has_comp[a]) homeless.push_back(a);
    }
    if (!homeless.empty() && free_.empty()) return std::nullopt;
    inside_.assign(m_, std::nullopt);
    std::vector<std::size_t> choice(homeless.size(), 0);
    for (;;) {
      for (std::size_t i = 0; i < homeless.size(); ++i) inside_[homeless[i]] = free_[choice[i]];
      if (auto r = try_inside()) return r;
      std::size_t i = homeless.size();
      while (i > 0 && choice[i - 1] + 1 == free_.size()) choice[--i] = 0;
      if (i == 0) return std::nullopt;
      ++choice[i - 1];
    }
  }

  std::optional<Assignment> try_inside() {
    // Candidate owners for each end of each free cut edge.
    std::vector<std::vector<AgentIndex>> candidates;
    for (EdgeIndex e : free_) {
      for (int end = 0; end < 2; ++end) {
        const VertexIndex v = g_.endpoint(e, end);
        std::vector<AgentIndex> c;
        for (AgentIndex a = 0; a < m_; ++a) {
          if (in_t_[a][v]) c.push_back(a);
        }
        if (c.empty()) return std::nullopt;
        candidates.push_back(std::move(c));
      }
    }
    std::vector<std::size_t> pick(candidates.size(), 0);
    for (;;) {
      std::vector<std::array<AgentIndex, 2>> ends(free_.size());
      for (std::size_t j = 0; j < free_.size(); ++j) {
        ends[j] = {candidates[2 * j][pick[2 * j]], candidates[2 * j + 1][pick[2 * j + 1]]};
      }
      if (auto r = solve_branch(ends)) return r;
      std::size_t i = pick.size();
      while (i > 0 && pick[i - 1] + 1 == candidates[i - 1].size()) pick[--i] = 0;
      if (i == 0) return std::nullopt;
      ++pick[i - 1];
    }
  }

  std::optional<Assignment> solve_branch(const std::vector<std::array<AgentIndex, 2>>& ends) {
    counters_.branches.fetch_add(1, std::memory_order_relaxed);
    std::vector<std::vector<AgentIndex>> allowed(free_.size());
    for (std::size_t j = 0; j < free_.size(); ++j) {
      std::set<AgentIndex> s{ends[j][0], ends[j][1]};
      for (AgentIndex a = 0; a < m_; ++a) {
        if (inside_[a] == free_[j]) s.insert(a);
      }
      allowed[j].assign(s.begin(), s.end());
    }

    LinearSystem lp;
    std::vector<std::vector<std::pair<AgentIndex, VariableId>>> vars(free_.size());
    for (std::size_t j = 0; j < free_.size(); ++j) {
      LinearForm total(-1);
      for (AgentIndex a : allowed[j]) {
        const VariableId x = lp.add_variable("x_" + g_.edge(free_[j]).id + "_" + inst_.agents[a]);
        vars[j].emplace_back(a, x);
        lp.add(LinearForm::variable(x), Relation::Ge);
        total.add_term(x, 1);
      }
      lp.add(std::move(total), Relation::Eq);
    }
    // value[b][a]: agent a's utility for the piece of b.
    std::vector<std::vector<LinearForm>> value(m_, std::vector<LinearForm>(m_));
    for (AgentIndex b = 0; b < m_; ++b) {
      for (AgentIndex a = 0; a < m_; ++a) {
        Rational full = 0;
        for (std::size_t c = 0; c < comp_vertices_.size(); ++c) {
          if (owner_[c] != b) continue;
          for (EdgeIndex e : comp_edges_[c]) full += inst_.utility(a, e);
        }
        for (EdgeIndex e : connectors_[b]) full += inst_.utility(a, e);
        value[b][a] = LinearForm(full);
      }
    }
    for (std::size_t j = 0; j < free_.size(); ++j) {
      for (const auto& [b, x] : vars[j]) {
        for (AgentIndex a = 0; a < m_; ++a) value[b][a].add_term(x, inst_.utility(a, free_[j]));
      }
    }
    for (AgentIndex a = 0; a < m_; ++a) {
      for (AgentIndex b = 0; b < m_; ++b) {
        if (a != b) lp.add(value[a][a] - value[b][a], Relation::Ge);
      }
    }
    counters_.lp_calls.fetch_add(1, std::memory_order_relaxed);
    Feasibility f = lp_feasible(lp);
    if (!f) return std::nullopt;

    std::vector<Piece> pieces(m_);
    for (std::size_t c = 0; c < comp_vertices_.size(); ++c) {
      for (EdgeIndex e : comp_edges_[c]) pieces[owner_[c]].parts.push_back(whole_edge(e));
    }
    for (AgentIndex a = 0; a < m_; ++a) {
      for (EdgeIndex e : connectors_[a]) pieces[a].parts.push_back(whole_edge(e));
    }
    for (std::size_t j = 0; j < free_.size(); ++j) {
      auto share = [&](AgentIndex a) {
        for (const auto& [b, x] : vars[j]) {
          if (b == a) return f.witness[x];
        }
        return Rational(0);
      };
      std::vector<detail::Segment> segments;
      segments.push_back({ends[j][0], share(ends[j][0]), true});
      for (AgentIndex a : allowed[j]) {
        if (a != ends[j][0] && a != ends[j][1]) segments.push_back({a, share(a), false});
      }
      segments.push_back({ends[j][1], ends[j][0] == ends[j][1] ? Rational(0) : share(ends[j][1]), true});
      detail::add_to_pieces(detail::lay_out_edge(free_[j], segments), pieces);
    }
    Assignment assignment{std::move(pieces)};
    const VerificationReport report = verify_assignment(inst_, assignment);
    if (!report.valid()) {
      throw std::logic_error("cut-set solver built an invalid assignment: " + report.to_text());
    }
    return assignment;
  }
};

void require_variant(const Instance& instance, Variant v) {
  if (instance.variant != v) {
    throw std::invalid_argument("solver requires variant " + std::string(variant_name(v)));
  }
}

// All subsets of {0..n-1} with size <= k, by size then lexicographically.
std::vector<std::vector<std::size_t>> small_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t size) {
    if (current.size() == size) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      current.push_back(i);
      rec(i + 1, size);
      current.pop_back();
    }
  };
  for (std::size_t size = 0; size <= std::min(n, k); ++size) rec(0, size);
  return out;
}

Verdict search_cut_sets(const Instance& instance, const std::vector<std::vector<EdgeIndex>>& cuts) {
  Counters counters;
  std::function<std::optional<Assignment>(std::size_t)> fn = [&](std::size_t i) {
    return CutSearch(instance, cuts[i], counters).run();
  };
  auto found = first_accepting(cuts.size(), fn);
  Verdict v;
  v.stats.branches = counters.branches.load();
  v.stats.lp_calls = counters.lp_calls.load();
  if (found) {
    v.yes = true;
    v.assignment = std::move(found->second);
  }
  return v;
}

}  // namespace

Verdict solve_with_cut_set(const Instance& instance, const std::vector<EdgeIndex>& cut) {
  const Graph& g = instance.graph;
  if (!g.is_tree() && !g.is_cycle()) throw GraphClassError("tree or cycle");
  for (EdgeIndex e : cut) {
    if (e >= g.edge_count()) throw UnknownEdge(e);
  }
  return search_cut_sets(instance, {cut});
}

Verdict solve_tree_vdgc(const Instance& instance) {
  if (!instance.graph.is_tree()) throw GraphClassError("tree");
  require_variant(instance, Variant::VDGC);
  const std::size_t m = instance.agent_count();
  const std::size_t k = m == 0 ? 0 : m - 1;
  return search_cut_sets(instance, small_subsets(instance.edge_count(), k));
}

Verdict solve_tree_gc_bounded_degree(const Instance& instance) {
  const Graph& g = instance.graph;
  if (!g.is_tree()) throw GraphClassError("tree");
  require_variant(instance, Variant::GC);
  const std::size_t m = instance.agent_count();
  const std::size_t nv = g.vertex_count();
  const std::size_t ne = g.edge_count();
  // Elements 0..nv-1 are vertices, the rest edges.
  std::vector<std::vector<EdgeIndex>> cuts;
  std::set<std::vector<EdgeIndex>> seen;
  for (const auto& subset : small_subsets(nv + ne, m)) {
    std::set<EdgeIndex> cut;
    for (std::size_t x : subset) {
      if (x < nv) {
        cut.insert(g.incident(x).begin(), g.incident(x).end());
      } else {
        cut.insert(x - nv);
      }
    }
    std::vector<EdgeIndex> c(cut.begin(), cut.end());
    if (seen.insert(c).second) cuts.push_back(std::move(c));
  }
  return search_cut_sets(instance, cuts);
}

Verdict solve_cycle(const Instance& instance) {
  if (!instance.graph.is_cycle()) throw GraphClassError("cycle");
  return search_cut_sets(instance, small_subsets(instance.edge_count(), instance.agent_count()));
}

}  // namespace efgc
