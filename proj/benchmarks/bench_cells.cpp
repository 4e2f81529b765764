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

#include <benchmark/benchmark.h>

#include <random>

#include "efgc/arrangement.hpp"

namespace {

using namespace efgc;

struct Setup {
  std::vector<LinearForm> forms;
  LinearSystem region;
};

Setup random_arrangement(std::size_t s, std::size_t d) {
  std::mt19937_64 rng(s * 31 + d);
  std::uniform_int_distribution<long> coef(-3, 3);
  Setup out;
  for (std::size_t i = 0; i < d; ++i) out.region.add_variable("x" + std::to_string(i));
  for (std::size_t i = 0; i < d; ++i) {
    out.region.add(LinearForm::variable(i) + LinearForm(Rational(4)), Relation::Ge);
    out.region.add(LinearForm(Rational(4)) - LinearForm::variable(i), Relation::Ge);
  }
  while (out.forms.size() < s) {
    LinearForm f{Rational(coef(rng))};
    for (std::size_t i = 0; i < d; ++i) f.add_term(i, Rational(coef(rng)));
    if (!f.is_constant()) out.forms.push_back(f);
  }
  return out;
}

template <CellMethod M>
void BM_Cells(benchmark::State& state) {
  const Setup s = random_arrangement(state.range(0), state.range(1));
  std::size_t cells = 0;
  for (auto _ : state) cells = enumerate_sign_conditions(s.forms, s.region, M).size();
  state.counters["cells"] = static_cast<double>(cells);
}
BENCHMARK(BM_Cells<CellMethod::Incremental>)->Args({4, 2})->Args({6, 3})->Args({8, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cells<CellMethod::Bfs>)->Args({4, 2})->Args({6, 3})->Args({8, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cells<CellMethod::Sweep>)->Args({4, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

}  // namespace
