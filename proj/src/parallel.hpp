#pragma once

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace riscov {

// Static block partition of [0, n) over up to `threads` workers. The body
// must only write to per-index slots or locally reduced state so results do
// not depend on the thread count.
inline void parallel_for(long long n, int threads,
                         const std::function<void(long long)>& body) {
  if (n <= 0) return;
  const long long workers = std::min<long long>(std::max(threads, 1), n);
  if (workers == 1) {
    for (long long i = 0; i < n; ++i) body(i);
    return;
  }
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  const long long chunk = (n + workers - 1) / workers;
  for (long long w = 0; w < workers; ++w) {
    const long long lo = w * chunk;
    const long long hi = std::min(n, lo + chunk);
    pool.emplace_back([&, lo, hi] {
      try {
        for (long long i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace riscov
