// Copyright 2026 The entmix authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTMIX_PARALLEL_HPP
#define ENTMIX_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace entmix {

/// Runs fn(index) for every index in [0, count) across a worker pool.
///
/// Callers keep per-index work independent (own RNG stream, own output
/// slot), so the schedule cannot change results. Exceptions propagate from
/// the first failing worker.
inline void parallel_for(std::int64_t count,
                         const std::function<void(std::int64_t)>& fn) {
  if (count <= 0) {
    return;
  }
  unsigned hw = std::thread::hardware_concurrency();
  std::int64_t n_workers =
      std::min<std::int64_t>(count, hw == 0 ? 1 : static_cast<std::int64_t>(hw));
  if (n_workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::vector<std::thread> workers;
  workers.reserve(n_workers);
  for (std::int64_t w = 0; w < n_workers; ++w) {
    workers.emplace_back([&]() {
      while (!failed.load(std::memory_order_relaxed)) {
        std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) {
          return;
        }
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) {
            error = std::current_exception();
          }
          return;
        }
      }
    });
  }
  for (auto& worker : workers) {
    worker.join();
  }
  if (failed && error) {
    std::rethrow_exception(error);
  }
}

}  // namespace entmix

#endif
