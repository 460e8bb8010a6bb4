#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace radspec::detail {

/// Runs body(i) for i in [0, count) on a bounded pool of threads. Each index
/// is handled exactly once; callers write results by index, so aggregation
/// order does not depend on scheduling.
template <class Body>
void parallel_for(std::size_t count, int workers, Body body) {
  std::size_t threads = workers > 0
                            ? static_cast<std::size_t>(workers)
                            : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        body(i);
      }
    });
  }
}

}  // namespace radspec::detail
