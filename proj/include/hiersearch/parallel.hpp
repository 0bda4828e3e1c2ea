#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hiersearch {

// Worker count: an explicit non-negative request wins, otherwise the
// HIERSEARCH_THREADS environment variable decides (absent or unparsable
// means 0). 0 and 1 both mean run on the calling thread.
inline std::size_t resolve_threads(int requested) {
  if (requested >= 0)
    return static_cast<std::size_t>(requested);
  const char *env = std::getenv("HIERSEARCH_THREADS");
  if (!env || !*env)
    return 0;
  char *end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0)
    return 0;
  return static_cast<std::size_t>(v);
}

// Runs body(0..n-1) across up to `workers` threads; with 0 or 1 workers the
// loop stays on the calling thread. The first exception wins and is
// rethrown after all workers join.
inline void parallel_for(std::size_t n, std::size_t workers,
                         const std::function<void(std::size_t)> &body) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n)
        return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error)
          error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  std::size_t count = std::min(workers, n);
  pool.reserve(count);
  for (std::size_t t = 0; t < count; ++t)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
}

} // namespace hiersearch
