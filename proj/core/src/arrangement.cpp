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

#include "efgc/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "efgc/errors.hpp"

namespace efgc {

int sign_at(const LinearForm& form, const Point& point) { return sign_of(form.evaluate(point)); }

SignVector sign_vector(const std::vector<LinearForm>& forms, const Point& point) {
  SignVector s;
  s.reserve(forms.size());
  for (const auto& f : forms) s.push_back(sign_at(f, point));
  return s;
}

DedupedForms dedupe_forms(const std::vector<LinearForm>& forms) {
  DedupedForms out;
  std::map<std::pair<std::vector<std::pair<VariableId, std::string>>, std::string>, std::size_t> seen;
  for (const auto& f : forms) {
    if (f.is_constant()) {
      out.index.push_back(static_cast<std::size_t>(-1));
      out.orientation.push_back(sign_of(f.constant()));
      continue;
    }
    const Rational lead = f.coefficients().begin()->second;
    LinearForm canonical = f * (1 / lead);
    std::vector<std::pair<VariableId, std::string>> key_terms;
    for (const auto& [v, c] : canonical.coefficients()) key_terms.emplace_back(v, to_string(c));
    auto key = std::make_pair(std::move(key_terms), to_string(canonical.constant()));
    auto [it, inserted] = seen.emplace(std::move(key), out.unique.size());
    if (inserted) out.unique.push_back(std::move(canonical));
    out.index.push_back(it->second);
    out.orientation.push_back(sign_of(lead));
  }
  return out;
}

namespace {

void add_sign_constraint(LinearSystem& system, const LinearForm& form, int sign) {
  if (sign == 0) {
    system.add(form, Relation::Eq);
  } else if (sign > 0) {
    system.add(form, Relation::Gt);
  } else {
    system.add(-form, Relation::Gt);
  }
}

Feasibility test_cell(const LinearSystem& region, const std::vector<LinearForm>& forms,
                      const SignVector& sign) {
  LinearSystem s = region;
  s.reserve(region.size() + sign.size());
  for (std::size_t i = 0; i < sign.size(); ++i) add_sign_constraint(s, forms[i], sign[i]);
  return strict_feasible(s);
}

using CellMap = std::map<SignVector, Point>;

CellMap sweep(const LinearSystem& region, const std::vector<LinearForm>& forms) {
  CellMap cells;
  const std::size_t s = forms.size();
  SignVector sign(s, -1);
  for (;;) {
    Feasibility f = test_cell(region, forms, sign);
    if (f) cells.emplace(sign, std::move(f.witness));
    std::size_t i = 0;
    while (i < s && sign[i] == 1) sign[i++] = -1;
    if (i == s) break;
    ++sign[i];
  }
  return cells;
}

CellMap bfs(const LinearSystem& region, const std::vector<LinearForm>& forms, const Point& seed) {
  CellMap cells;
  std::set<SignVector> tested;
  std::deque<SignVector> queue;
  SignVector start = sign_vector(forms, seed);
  cells.emplace(start, seed);
  tested.insert(start);
  queue.push_back(start);
  auto consider = [&](const SignVector& candidate) {
    if (!tested.insert(candidate).second) return;
    Feasibility f = test_cell(region, forms, candidate);
    if (!f) return;
    cells.emplace(candidate, std::move(f.witness));
    queue.push_back(candidate);
  };
  const std::size_t s = forms.size();
  while (!queue.empty()) {
    const SignVector current = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < s; ++i) {
      for (int vi = -1; vi <= 1; ++vi) {
        if (vi == current[i]) continue;
        SignVector c = current;
        c[i] = vi;
        consider(c);
        for (std::size_t j = i + 1; j < s; ++j) {
          for (int vj = -1; vj <= 1; ++vj) {
            if (vj == current[j]) continue;
            SignVector d = c;
            d[j] = vj;
            consider(d);
          }
        }
      }
    }
  }
  return cells;
}

void incremental_step(const LinearSystem& prefix, const std::vector<LinearForm>& forms,
                      SignVector& sign, const Point& witness, CellMap& cells) {
  const std::size_t k = sign.size();
  if (k == forms.size()) {
    cells.emplace(sign, witness);
    return;
  }
  const int here = sign_at(forms[k], witness);
  for (int v = -1; v <= 1; ++v) {
    LinearSystem next = prefix;
    add_sign_constraint(next, forms[k], v);
    Point point;
    if (v == here) {
      point = witness;
    } else {
      Feasibility f = strict_feasible(next);
      if (!f) continue;
      point = std::move(f.witness);
    }
    sign.push_back(v);
    incremental_step(next, forms, sign, point, cells);
    sign.pop_back();
  }
}

}  // namespace

std::vector<CellWitness> enumerate_sign_conditions(const std::vector<LinearForm>& forms,
                                                   const LinearSystem& region, CellMethod method) {
  for (const auto& f : forms) {
    for (const auto& [v, c] : f.coefficients()) {
      if (v >= region.variable_count()) {
        throw std::invalid_argument("form references a variable outside the region");
      }
    }
  }
  Feasibility seed = lp_feasible(region);
  if (!seed) throw EmptyRegion();

  const DedupedForms d = dedupe_forms(forms);
  CellMap cells;
  switch (method) {
    case CellMethod::Sweep:
      cells = sweep(region, d.unique);
      break;
    case CellMethod::Bfs:
      cells = bfs(region, d.unique, seed.witness);
      break;
    case CellMethod::Auto:
    case CellMethod::Incremental: {
      SignVector prefix;
      incremental_step(region, d.unique, prefix, seed.witness, cells);
      break;
    }
  }

  std::vector<CellWitness> out;
  out.reserve(cells.size());
  for (auto& [unique_sign, point] : cells) {
    SignVector full(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
      full[i] = d.index[i] == static_cast<std::size_t>(-1) ? d.orientation[i]
                                                          : d.orientation[i] * unique_sign[d.index[i]];
    }
    out.push_back({std::move(full), std::move(point)});
  }
  std::sort(out.begin(), out.end(),
            [](const CellWitness& x, const CellWitness& y) { return x.sign < y.sign; });
  return out;
}

}  // namespace efgc
