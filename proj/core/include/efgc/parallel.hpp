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

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace efgc {

// Hardware concurrency, capped by EFGC_THREADS when set to a positive integer.
std::size_t worker_count();

// Evaluates fn(0..n-1) on up to `workers` threads and returns the result of
// the smallest index whose call yields a value. Indices above an accepted one
// may be skipped, so the answer does not depend on scheduling.
template <class T>
std::optional<std::pair<std::size_t, T>> first_accepting(
    std::size_t n, const std::function<std::optional<T>(std::size_t)>& fn,
    std::size_t workers = worker_count()) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (auto r = fn(i)) return std::make_pair(i, std::move(*r));
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};
  std::mutex mutex;
  std::optional<T> best_value;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || i >= best.load()) return;
      auto r = fn(i);
      if (!r) continue;
      std::lock_guard lock(mutex);
      if (i < best.load()) {
        best.store(i);
        best_value = std::move(r);
      }
    }
  };
  std::vector<std::thread> threads;
  const std::size_t count = std::min(workers, n);
  for (std::size_t t = 0; t < count; ++t) threads.emplace_back(work);
  for (auto& t : threads) t.join();
  if (!best_value) return std::nullopt;
  return std::make_pair(best.load(), std::move(*best_value));
}

}  // namespace efgc
