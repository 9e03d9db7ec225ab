#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ownet {

// Worker count: explicit > OWNET_JOBS env > hardware concurrency.
inline int resolve_jobs(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("OWNET_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, count) over `jobs` threads. Work is assigned by
// static stride so that output written into index i of a preallocated buffer
// is deterministic regardless of scheduling.
inline void parallel_for(std::size_t count, int jobs,
                         const std::function<void(std::size_t)>& fn) {
  const int n_threads = std::min<std::size_t>(resolve_jobs(jobs), count);
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < count;
           i += static_cast<std::size_t>(n_threads))
        fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace ownet
