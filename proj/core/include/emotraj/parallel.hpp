// Copyright 2026 The emotraj authors
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

#ifndef EMOTRAJ_PARALLEL_HPP_
#define EMOTRAJ_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace emotraj
{

/// Applies fn to every item on up to `jobs` worker threads. Results are
/// stored by input slot, so the output order never depends on thread
/// scheduling. The first (lowest-index) exception is rethrown after all
/// workers finish. fn must be safe to call concurrently on const items.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T> & items, std::size_t jobs, Fn fn)
  -> std::vector<std::invoke_result_t<Fn &, const T &>>
{
  using R = std::invoke_result_t<Fn &, const T &>;
  std::vector<R> out;
  if (items.empty()) {
    return out;
  }
  const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, items.size()));
  if (workers == 1) {
    out.reserve(items.size());
    for (const auto & item : items) {
      out.push_back(fn(item));
    }
    return out;
  }

  std::vector<std::optional<R>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= items.size()) {
          return;
        }
        try {
          slots[i].emplace(fn(items[i]));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto & t : pool) {
    t.join();
  }
  for (const auto & error : errors) {
    if (error) {
      std::rethrow_exception(error);
    }
  }
  out.reserve(items.size());
  for (auto & slot : slots) {
    out.push_back(std::move(*slot));
  }
  return out;
}

}  // namespace emotraj

#endif  // EMOTRAJ_PARALLEL_HPP_
