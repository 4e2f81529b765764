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
#include <optional>
#include <string>
#include <vector>

#include "efgc/model.hpp"

namespace efgc {

struct SolveStats {
  std::size_t branches = 0;
  std::size_t lp_calls = 0;
};

struct Verdict {
  bool yes = false;
  // Present iff yes.
  std::optional<Assignment> assignment;
  SolveStats stats;
  std::vector<std::string> warnings;
};

}  // namespace efgc
