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

#include "efgc/lp.hpp"

namespace {

using namespace efgc;

// m random inequalities in d variables around a box that keeps it bounded.
LinearSystem random_system(std::size_t d, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-5, 5);
  LinearSystem s;
  for (std::size_t i = 0; i < d; ++i) s.add_variable("x" + std::to_string(i));
  for (std::size_t i = 0; i < d; ++i) {
    s.add(LinearForm::variable(i) + LinearForm(Rational(10)), Relation::Ge);
    s.add(LinearForm(Rational(10)) - LinearForm::variable(i), Relation::Ge);
  }
  for (std::size_t k = 0; k < m; ++k) {
    LinearForm f{Rational(std::abs(coef(rng)) + 1)};
    for (std::size_t i = 0; i < d; ++i) f.add_term(i, Rational(coef(rng)));
    s.add(f, Relation::Ge);
  }
  return s;
}

void BM_LpFeasible(benchmark::State& state) {
  const LinearSystem s = random_system(state.range(0), state.range(1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lp_feasible(s));
}
BENCHMARK(BM_LpFeasible)->Args({3, 6})->Args({6, 12})->Args({12, 24});

void BM_StrictFeasible(benchmark::State& state) {
  LinearSystem s = random_system(state.range(0), state.range(1), 2);
  s.add(LinearForm::variable(0) + LinearForm(Rational(1)), Relation::Gt);
  for (auto _ : state) benchmark::DoNotOptimize(strict_feasible(s));
}
BENCHMARK(BM_StrictFeasible)->Args({3, 6})->Args({6, 12});

void BM_FarkasCertificate(benchmark::State& state) {
  LinearSystem s = random_system(state.range(0), state.range(1), 3);
  s.add(LinearForm::variable(0) - LinearForm(Rational(20)), Relation::Ge);
  for (auto _ : state) benchmark::DoNotOptimize(farkas_certificate(s));
}
BENCHMARK(BM_FarkasCertificate)->Args({3, 6})->Args({6, 12});

}  // namespace
