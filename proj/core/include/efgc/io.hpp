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

#include <string>
#include <string_view>
#include <vector>

#include "efgc/lp.hpp"
#include "efgc/model.hpp"

namespace efgc {

// Line-oriented instance format; '#' starts a comment.
//
//   efgc-instance v1
//   variant gc
//   vertices v1 v2 v3
//   edge e1 v1 v2
//   agent a1 e1=1 e2=1/2
//
// Missing utilities are 0. The result is validated and normalized. Throws
// ParseError, ValidationError or AllZeroAgent.
Instance parse_instance(std::string_view text);
std::string emit_instance(const Instance& instance);

// efgc-assignment v1, then "piece AGENT EDGE LO HI closed|open closed|open".
std::string emit_assignment(const Assignment& assignment, const Instance& instance);
Assignment parse_assignment(std::string_view text, const Instance& instance);

// efgc-linear v1, then "vars NAME...", and lines "form|eq|ge|gt CONST
// NAME=COEF ..." each standing for CONST + sum COEF * NAME.
struct LinearFile {
  std::vector<std::string> variables;
  std::vector<LinearForm> forms;
  LinearSystem system;
};
LinearFile parse_linear(std::string_view text);

}  // namespace efgc
