#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace mbspec::par {

/// Execute independent jobs on up to `workers` threads.
///
/// Jobs write to disjoint outputs, so results are identical for every worker
/// count; scheduling only changes wall time. workers <= 1 runs inline.
inline void run_jobs(std::span<const std::function<void()>> jobs, int workers) {
  if (workers <= 1 || jobs.size() <= 1) {
    for (const auto& j : jobs) j();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error = nullptr;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        jobs[i]();
      } catch (...) {
        bool expected = false;
        if (failed.compare_exchange_strong(expected, true))
          first_error = std::current_exception();
      }
    }
  };
  std::size_t extra = std::min<std::size_t>(workers - 1, jobs.size() - 1);
  std::vector<std::thread> pool;
  pool.reserve(extra);
  for (std::size_t i = 0; i < extra; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace mbspec::par
