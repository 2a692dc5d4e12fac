#pragma once

// Minimal deterministic work-unit runner. Units are pulled from a shared
// counter by `jobs` threads; jobs == 1 degenerates to a plain sequential
// loop (the audit mode). Callers keep per-worker or per-unit state and merge
// it in a fixed order, so results never depend on the schedule.

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace k4e {

inline void for_each_unit(int units, int jobs,
                          const std::function<void(int unit, int worker)>& fn) {
  if (jobs <= 1 || units <= 1) {
    for (int u = 0; u < units; ++u) fn(u, 0);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&](int worker) {
    for (;;) {
      int u = next.fetch_add(1);
      if (u >= units || failed.load()) return;
      try {
        fn(u, worker);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) workers.emplace_back(run, w);
  for (auto& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace k4e
