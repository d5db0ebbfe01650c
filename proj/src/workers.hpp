// Internal: run a callable on N threads, rethrowing the first exception in
// the calling thread instead of terminating.
#pragma once

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace unimap::detail {

inline void run_workers(int threads, const std::function<void()>& work) {
  if (threads <= 1) {
    work();
    return;
  }
  std::exception_ptr first;
  std::mutex mu;
  auto guarded = [&]() {
    try {
      work();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first) first = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int i = 0; i < threads; ++i) pool.emplace_back(guarded);
  for (auto& th : pool) th.join();
  if (first) std::rethrow_exception(first);
}

}  // namespace unimap::detail
