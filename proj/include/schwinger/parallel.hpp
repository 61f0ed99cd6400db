#pragma once

// Ordered parallel map over a grid. Results land at the index of their input,
// so the thread count never changes the output.

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace schwinger {

// SCHWINGER_KIT_THREADS if set to a positive integer, else the hardware
// concurrency (at least 1).
unsigned worker_count();

template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& inputs, Fn fn)
    -> std::vector<decltype(fn(inputs.front()))> {
  using Out = decltype(fn(inputs.front()));
  std::vector<Out> out(inputs.size());
  const unsigned workers =
      std::min<unsigned>(worker_count(), static_cast<unsigned>(inputs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      out[i] = fn(inputs[i]);
    }
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failure_index = inputs.size();
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      try {
        out[i] = fn(inputs[i]);
      } catch (...) {
        // Report the failure of the lowest grid index, as a serial run would.
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (i < failure_index) {
          failure_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back(work);
  }
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return out;
}

} // namespace schwinger
