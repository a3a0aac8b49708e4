// Copyright 2026 The Authors.
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

#ifndef MATPROX_PARALLEL_HPP
#define MATPROX_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace matprox {

/// Smallest i in [0, count) with pred(i), or count if there is none.
///
/// With workers > 1 the indices are dealt out round-robin to threads. The
/// answer is the same for every worker count; a thread stops once its next
/// index exceeds the best hit found so far.
template <typename Pred>
std::size_t parallel_find_first(std::size_t count, int workers, Pred&& pred) {
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return count;
  }
  std::atomic<std::size_t> best{count};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  const auto stride = static_cast<std::size_t>(workers);
  for (std::size_t w = 0; w < stride; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += stride) {
          if (i >= best.load(std::memory_order_relaxed)) return;
          if (pred(i)) {
            std::size_t current = best.load();
            while (i < current && !best.compare_exchange_weak(current, i)) {
            }
            return;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return best.load();
}

}  // namespace matprox

#endif  // MATPROX_PARALLEL_HPP
