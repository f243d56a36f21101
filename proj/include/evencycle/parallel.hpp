#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace evencycle {

/**
 * out[i] = f(i) for i in [0, count), computed by up to `workers` threads.
 * Work is handed out one index at a time; results land at their input
 * position, so the output never depends on the worker count. The first
 * exception thrown by f is rethrown on the calling thread.
 */
template <class Out, class F>
std::vector<Out> ordered_map(std::size_t count, int workers, F&& f) {
  std::vector<Out> out(count);
  const std::size_t threads =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::atomic_flag error_set = ATOMIC_FLAG_INIT;
  auto body = [&] {
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        if (!error_set.test_and_set()) {
          error = std::current_exception();
          failed = true;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (std::size_t t = 1; t < threads; ++t)
    pool.emplace_back(body);
  body();
  for (auto& t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
  return out;
}

} // namespace evencycle
