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
#include <stdexcept>
#include <string>

namespace efgc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An agent values every edge at zero, so its utilities cannot be normalized.
class AllZeroAgent : public Error {
 public:
  explicit AllZeroAgent(const std::string& agent)
      : Error("agent '" + agent + "' values every edge at 0"), agent_(agent) {}
  const std::string& agent() const noexcept { return agent_; }

 private:
  std::string agent_;
};

class UnknownEdge : public Error {
 public:
  explicit UnknownEdge(std::size_t edge)
      : Error("piece references unknown edge index " + std::to_string(edge)) {}
};

// A structural precondition of a solver does not hold (NotTree, NotCycle,
// NotTreeOrCycle).
class GraphClassError : public Error {
 public:
  explicit GraphClassError(const std::string& expected)
      : Error("graph is not a " + expected), expected_(expected) {}
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string expected_;
};

class EmptyRegion : public Error {
 public:
  EmptyRegion() : Error("region polytope is empty") {}
};

class InconsistentLengths : public Error {
 public:
  explicit InconsistentLengths(const std::string& what) : Error("inconsistent lengths: " + what) {}
};

// Generator input outside the reduction's domain.
class GeneratorError : public Error {
 public:
  enum class Kind { EmptyInput, ZeroSum, NonPositiveValue };
  GeneratorError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Names the violated instance invariant, e.g. "connected" or "simple".
class ValidationError : public Error {
 public:
  ValidationError(const std::string& invariant, const std::string& detail)
      : Error("invalid instance (" + invariant + "): " + detail), invariant_(invariant) {}
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace efgc
