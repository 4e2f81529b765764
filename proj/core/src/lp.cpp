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

#include "efgc/lp.hpp"

#include <optional>
#include <stdexcept>

namespace efgc {

LinearForm LinearForm::variable(VariableId v, Rational coefficient) {
  LinearForm f;
  f.add_term(v, coefficient);
  return f;
}

Rational LinearForm::coefficient(VariableId v) const {
  auto it = coefficients_.find(v);
  return it == coefficients_.end() ? Rational(0) : it->second;
}

LinearForm& LinearForm::add_term(VariableId v, const Rational& coefficient) {
  if (coefficient == 0) return *this;
  auto [it, inserted] = coefficients_.emplace(v, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coefficients_.erase(it);
  }
  return *this;
}

LinearForm& LinearForm::add_constant(const Rational& c) {
  constant_ += c;
  return *this;
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  for (const auto& [v, c] : other.coefficients_) add_term(v, c);
  constant_ += other.constant_;
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
  for (const auto& [v, c] : other.coefficients_) add_term(v, -c);
  constant_ -= other.constant_;
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& factor) {
  if (factor == 0) {
    coefficients_.clear();
    constant_ = 0;
    return *this;
  }
  for (auto& [v, c] : coefficients_) c *= factor;
  constant_ *= factor;
  return *this;
}

Rational LinearForm::evaluate(const Point& point) const {
  Rational value = constant_;
  for (const auto& [v, c] : coefficients_) {
    if (v < point.size()) value += c * point[v];
  }
  return value;
}

bool holds(const Constraint& c, const Point& point) {
  const int s = sign_of(c.form.evaluate(point));
  switch (c.relation) {
    case Relation::Eq: return s == 0;
    case Relation::Ge: return s >= 0;
    case Relation::Gt: return s > 0;
  }
  return false;
}

VariableId LinearSystem::add_variable(std::string name) {
  names_.push_back(std::move(name));
  return names_.size() - 1;
}

std::optional<VariableId> LinearSystem::find_variable(const std::string& name) const {
  for (VariableId v = 0; v < names_.size(); ++v) {
    if (names_[v] == name) return v;
  }
  return std::nullopt;
}

void LinearSystem::add(LinearForm form, Relation relation) {
  for (const auto& [v, c] : form.coefficients()) {
    if (v >= names_.size()) {
      throw std::invalid_argument("constraint references undeclared variable " + std::to_string(v));
    }
  }
  constraints_.push_back({std::move(form), relation});
}

bool LinearSystem::has_strict() const {
  for (const auto& c : constraints_) {
    if (c.relation == Relation::Gt) return true;
  }
  return false;
}

bool LinearSystem::satisfied_by(const Point& point) const {
  if (point.size() != names_.size()) return false;
  for (const auto& c : constraints_) {
    if (!holds(c, point)) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Dense tableau in canonical form; maximizes. z holds the reduced costs and
// objective the current value.
class Tableau {
 public:
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<std::size_t> basis;
  std::vector<Rational> z;
  Rational objective;
  std::vector<bool> banned;

  std::size_t cols() const { return banned.size(); }

  void pivot(std::size_t r, std::size_t c) {
    std::vector<Rational>& row = a[r];
    if (row[c] != 1) {
      const Rational inv = 1 / row[c];
      for (auto& x : row) {
        if (x != 0) x *= inv;
      }
      b[r] *= inv;
    }
    nonzero_.clear();
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] != 0) nonzero_.push_back(k);
    }
    // Explicit mpq calls with reused scratch values; gmpxx expressions would
    // allocate a temporary per entry.
    auto eliminate = [&](std::vector<Rational>& target, Rational& rhs, bool objective_row) {
      factor_ = target[c];
      for (std::size_t k : nonzero_) {
        mpq_mul(scratch_.get_mpq_t(), factor_.get_mpq_t(), row[k].get_mpq_t());
        mpq_sub(target[k].get_mpq_t(), target[k].get_mpq_t(), scratch_.get_mpq_t());
      }
      mpq_mul(scratch_.get_mpq_t(), factor_.get_mpq_t(), b[r].get_mpq_t());
      if (objective_row) {
        mpq_add(rhs.get_mpq_t(), rhs.get_mpq_t(), scratch_.get_mpq_t());
      } else {
        mpq_sub(rhs.get_mpq_t(), rhs.get_mpq_t(), scratch_.get_mpq_t());
      }
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      eliminate(a[i], b[i], false);
    }
    if (z[c] != 0) eliminate(z, objective, true);
    basis[r] = c;
  }

  void set_objective(const std::vector<Rational>& c) {
    z = c;
    objective = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Rational f = c[basis[i]];
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols(); ++k) {
        if (a[i][k] != 0) z[k] -= f * a[i][k];
      }
      objective += f * b[i];
    }
  }

  // Bland's rule. Returns false if unbounded.
  bool run() {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!banned[j] && z[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i][enter] <= 0) continue;
        mpq_div(scratch_.get_mpq_t(), b[i].get_mpq_t(), a[i][enter].get_mpq_t());
        const int cmp = leave == kNone ? -1 : cmp_ratio();
        if (cmp < 0 || (cmp == 0 && basis[i] < basis[leave])) {
          leave = i;
          std::swap(best_, scratch_);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void remove_row(std::size_t r) {
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(r));
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(r));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  int cmp_ratio() const { return mpq_cmp(scratch_.get_mpq_t(), best_.get_mpq_t()); }

  std::vector<std::size_t> nonzero_;
  Rational factor_;
  Rational scratch_;
  Rational best_;
};

struct Prepared {
  Tableau tableau;
  std::vector<std::size_t> pos_col;
  std::vector<std::size_t> neg_col;
  // Original value = shift + pos - neg.
  std::vector<Rational> shift;
  std::size_t first_artificial = 0;
};

void require_nonstrict(const LinearSystem& system) {
  if (system.has_strict()) throw std::invalid_argument("strict constraint passed to a non-strict LP call");
}

// Single-variable x >= nonpositive-constant rows imply x >= 0; those with
// constant 0 are implied by the column bound and dropped.
Prepared prepare(const LinearSystem& system) {
  const std::size_t n = system.variable_count();
  // A single-variable row coef*x + c >= 0 with coef > 0 bounds x below by
  // -c/coef. Bounded variables are shifted to x = lower + x' with x' >= 0;
  // the rows giving the tightest bound become redundant and are dropped.
  std::vector<std::optional<Rational>> lower(n);
  std::vector<bool> drop(system.size(), false);
  for (const auto& c : system.constraints()) {
    if (c.relation != Relation::Ge || c.form.coefficients().size() != 1) continue;
    const auto& [v, coef] = *c.form.coefficients().begin();
    if (coef <= 0) continue;
    Rational bound = -c.form.constant() / coef;
    if (!lower[v] || bound > *lower[v]) lower[v] = std::move(bound);
  }
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Constraint& c = system.constraints()[i];
    if (c.relation != Relation::Ge || c.form.coefficients().size() != 1) continue;
    const auto& [v, coef] = *c.form.coefficients().begin();
    if (coef > 0 && -c.form.constant() / coef == *lower[v]) drop[i] = true;
  }

  Prepared p;
  std::size_t col = 0;
  p.pos_col.assign(n, kNone);
  p.neg_col.assign(n, kNone);
  p.shift.assign(n, Rational(0));
  for (std::size_t v = 0; v < n; ++v) {
    p.pos_col[v] = col++;
    if (lower[v]) {
      p.shift[v] = *lower[v];
    } else {
      p.neg_col[v] = col++;
    }
  }
  std::vector<std::size_t> rows;
  std::size_t slack_count = 0;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (drop[i]) continue;
    rows.push_back(i);
    if (system.constraints()[i].relation == Relation::Ge) ++slack_count;
  }
  const std::size_t slack_begin = col;
  const std::size_t art_begin = slack_begin + slack_count;

  // First pass to count artificials.
  struct RowInfo {
    std::vector<std::pair<std::size_t, Rational>> entries;
    Rational rhs;
    std::size_t slack = kNone;
    bool needs_artificial = true;
  };
  std::vector<RowInfo> info;
  std::size_t slack = slack_begin;
  std::size_t artificial_count = 0;
  for (std::size_t i : rows) {
    const Constraint& c = system.constraints()[i];
    RowInfo r;
    for (const auto& [v, coef] : c.form.coefficients()) {
      r.entries.emplace_back(p.pos_col[v], coef);
      if (p.neg_col[v] != kNone) r.entries.emplace_back(p.neg_col[v], -coef);
    }
    r.rhs = -c.form.constant();
    for (const auto& [v, coef] : c.form.coefficients()) r.rhs -= coef * p.shift[v];
    Rational slack_coef = 0;
    if (c.relation == Relation::Ge) {
      r.slack = slack++;
      slack_coef = -1;
    }
    if (r.rhs < 0) {
      for (auto& e : r.entries) e.second = -e.second;
      r.rhs = -r.rhs;
      slack_coef = -slack_coef;
    }
    if (r.slack != kNone) r.entries.emplace_back(r.slack, slack_coef);
    r.needs_artificial = !(r.slack != kNone && slack_coef == 1);
    if (r.needs_artificial) ++artificial_count;
    info.push_back(std::move(r));
  }

  const std::size_t total = art_begin + artificial_count;
  Tableau& t = p.tableau;
  t.banned.assign(total, false);
  t.a.assign(info.size(), std::vector<Rational>(total));
  t.b.resize(info.size());
  t.basis.resize(info.size());
  std::size_t art = art_begin;
  for (std::size_t r = 0; r < info.size(); ++r) {
    for (const auto& [k, coef] : info[r].entries) t.a[r][k] = coef;
    t.b[r] = info[r].rhs;
    if (info[r].needs_artificial) {
      t.a[r][art] = 1;
      t.basis[r] = art++;
    } else {
      t.basis[r] = info[r].slack;
    }
  }
  p.first_artificial = art_begin;
  return p;
}

// Returns false if infeasible. Leaves a feasible basis without artificials.
bool phase_one(Prepared& p) {
  Tableau& t = p.tableau;
  const std::size_t total = t.cols();
  if (p.first_artificial == total) return true;
  std::vector<Rational> c(total);
  for (std::size_t k = p.first_artificial; k < total; ++k) c[k] = -1;
  t.set_objective(c);
  t.run();
  if (t.objective < 0) return false;
  for (std::size_t k = p.first_artificial; k < total; ++k) t.banned[k] = true;
  for (std::size_t r = 0; r < t.a.size();) {
    if (t.basis[r] < p.first_artificial) {
      ++r;
      continue;
    }
    std::size_t col = kNone;
    for (std::size_t k = 0; k < p.first_artificial; ++k) {
      if (t.a[r][k] != 0) {
        col = k;
        break;
      }
    }
    if (col == kNone) {
      t.remove_row(r);
    } else {
      t.pivot(r, col);
      ++r;
    }
  }
  return true;
}

Point extract(const Prepared& p, std::size_t n) {
  const Tableau& t = p.tableau;
  std::vector<Rational> column_value(t.cols());
  for (std::size_t r = 0; r < t.a.size(); ++r) column_value[t.basis[r]] = t.b[r];
  Point x(n);
  for (std::size_t v = 0; v < n; ++v) {
    x[v] = p.shift[v] + column_value[p.pos_col[v]];
    if (p.neg_col[v] != kNone) x[v] -= column_value[p.neg_col[v]];
  }
  return x;
}

}  // namespace

Feasibility lp_feasible(const LinearSystem& system) {
  require_nonstrict(system);
  Prepared p = prepare(system);
  if (!phase_one(p)) return {};
  return {true, extract(p, system.variable_count())};
}

LpOutcome lp_max(const LinearSystem& system, const LinearForm& objective) {
  require_nonstrict(system);
  for (const auto& [v, c] : objective.coefficients()) {
    if (v >= system.variable_count()) throw std::invalid_argument("objective references undeclared variable");
  }
  Prepared p = prepare(system);
  LpOutcome out;
  if (!phase_one(p)) return out;
  std::vector<Rational> c(p.tableau.cols());
  for (const auto& [v, coef] : objective.coefficients()) {
    c[p.pos_col[v]] += coef;
    if (p.neg_col[v] != kNone) c[p.neg_col[v]] -= coef;
  }
  p.tableau.set_objective(c);
  if (!p.tableau.run()) {
    out.status = LpOutcome::Status::Unbounded;
    return out;
  }
  out.status = LpOutcome::Status::Optimal;
  out.witness = extract(p, system.variable_count());
  out.value = objective.evaluate(out.witness);
  return out;
}

Feasibility strict_feasible(const LinearSystem& system) {
  if (!system.has_strict()) return lp_feasible(system);
  LinearSystem relaxed;
  for (const auto& name : system.variable_names()) relaxed.add_variable(name);
  const VariableId t = relaxed.add_variable("$slack");
  relaxed.reserve(system.size() + 2);
  for (const auto& c : system.constraints()) {
    if (c.relation == Relation::Gt) {
      relaxed.add(c.form - LinearForm::variable(t), Relation::Ge);
    } else {
      relaxed.add(c);
    }
  }
  relaxed.add(LinearForm::variable(t), Relation::Ge);
  relaxed.add(LinearForm(1) - LinearForm::variable(t), Relation::Ge);
  LpOutcome out = lp_max(relaxed, LinearForm::variable(t));
  if (out.status != LpOutcome::Status::Optimal || out.value <= 0) return {};
  out.witness.pop_back();
  return {true, std::move(out.witness)};
}

std::optional<std::vector<Rational>> farkas_certificate(const LinearSystem& system) {
  require_nonstrict(system);
  const std::size_t m = system.size();
  LinearSystem dual;
  for (std::size_t i = 0; i < m; ++i) dual.add_variable("lambda" + std::to_string(i));
  std::vector<LinearForm> columns(system.variable_count());
  LinearForm constant_row(1);
  for (std::size_t i = 0; i < m; ++i) {
    const Constraint& c = system.constraints()[i];
    if (c.relation == Relation::Ge) dual.add(LinearForm::variable(i), Relation::Ge);
    for (const auto& [v, coef] : c.form.coefficients()) columns[v].add_term(i, coef);
    constant_row.add_term(i, c.form.constant());
  }
  for (auto& col : columns) {
    if (!col.is_zero()) dual.add(std::move(col), Relation::Eq);
  }
  dual.add(std::move(constant_row), Relation::Eq);
  Feasibility f = lp_feasible(dual);
  if (!f) return std::nullopt;
  return std::move(f.witness);
}

bool verify_farkas(const LinearSystem& system, const std::vector<Rational>& multipliers) {
  if (multipliers.size() != system.size()) return false;
  LinearForm combined;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Constraint& c = system.constraints()[i];
    if (c.relation != Relation::Eq && multipliers[i] < 0) return false;
    combined += c.form * multipliers[i];
  }
  return combined.is_constant() && combined.constant() < 0;
}

}  // namespace efgc
