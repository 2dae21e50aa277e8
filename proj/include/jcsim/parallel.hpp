#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace jcsim {

// Process-wide worker count used by the data-parallel loops (spectrum columns,
// trajectory fills).  Results are schedule-independent: every worker writes a
// disjoint, pre-assigned slice and there are no cross-thread reductions.
inline std::atomic<int>& thread_count_slot() {
  static std::atomic<int> count{1};
  return count;
}

inline void set_thread_count(int n) { thread_count_slot().store(std::max(1, n)); }

inline int thread_count() { return thread_count_slot().load(); }

template <typename Fn>
void parallel_for(long total, Fn&& fn) {
  if (total <= 0) return;
  const long workers = std::min<long>(thread_count(), total);
  if (workers <= 1) {
    fn(0L, total);
    return;
  }
  const long chunk = (total + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (long w = 0; w < workers; ++w) {
    const long begin = w * chunk;
    const long end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace jcsim
