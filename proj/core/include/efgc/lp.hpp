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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "efgc/rational.hpp"

namespace efgc {

using VariableId = std::size_t;
using Point = std::vector<Rational>;

// constant + sum of coefficient * variable. Zero coefficients are never stored.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(Rational constant) : constant_(std::move(constant)) {}
  static LinearForm variable(VariableId v, Rational coefficient = 1);

  const std::map<VariableId, Rational>& coefficients() const { return coefficients_; }
  const Rational& constant() const { return constant_; }
  Rational coefficient(VariableId v) const;

  LinearForm& add_term(VariableId v, const Rational& coefficient);
  LinearForm& add_constant(const Rational& c);

  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  LinearForm& operator*=(const Rational& factor);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const Rational& k) { return a *= k; }
  friend LinearForm operator*(const Rational& k, LinearForm a) { return a *= k; }
  LinearForm operator-() const { return *this * Rational(-1); }

  // True iff every coefficient is zero (the form is a constant).
  bool is_constant() const { return coefficients_.empty(); }
  bool is_zero() const { return coefficients_.empty() && constant_ == 0; }
  // Variables beyond point.size() evaluate as 0.
  Rational evaluate(const Point& point) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::map<VariableId, Rational> coefficients_;
  Rational constant_;
};

enum class Relation { Eq, Ge, Gt };

// form (relation) 0
struct Constraint {
  LinearForm form;
  Relation relation = Relation::Ge;
};

bool holds(const Constraint& c, const Point& point);

class LinearSystem {
 public:
  VariableId add_variable(std::string name);
  std::size_t variable_count() const { return names_.size(); }
  const std::string& variable_name(VariableId v) const { return names_.at(v); }
  const std::vector<std::string>& variable_names() const { return names_; }
  std::optional<VariableId> find_variable(const std::string& name) const;

  // Throws std::invalid_argument if the form references an undeclared variable.
  void add(LinearForm form, Relation relation);
  void add(const Constraint& c) { add(c.form, c.relation); }
  void reserve(std::size_t constraints) { constraints_.reserve(constraints); }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  std::size_t size() const { return constraints_.size(); }

  bool has_strict() const;
  bool satisfied_by(const Point& point) const;

 private:
  std::vector<std::string> names_;
  std::vector<Constraint> constraints_;
};

struct Feasibility {
  bool feasible = false;
  Point witness;
  explicit operator bool() const { return feasible; }
};

struct LpOutcome {
  enum class Status { Infeasible, Unbounded, Optimal };
  Status status = Status::Infeasible;
  Rational value;
  Point witness;
};

// Systems passed to lp_feasible and lp_max must not contain strict
// constraints; std::invalid_argument otherwise.
Feasibility lp_feasible(const LinearSystem& system);
LpOutcome lp_max(const LinearSystem& system, const LinearForm& objective);

// Strict constraints f > 0 become f - t >= 0 with 0 <= t <= 1, and t is
// maximized. Feasible iff the optimum is positive.
Feasibility strict_feasible(const LinearSystem& system);

// Multipliers, one per constraint, with lambda >= 0 on inequalities, such that
// sum lambda_i * form_i has zero coefficients and constant -1. Only for
// systems without strict constraints; nullopt when the system is feasible.
std::optional<std::vector<Rational>> farkas_certificate(const LinearSystem& system);
bool verify_farkas(const LinearSystem& system, const std::vector<Rational>& multipliers);

}  // namespace efgc
