#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "gm/errors.hpp"

namespace gm {

/// Calls body(k, worker) for k in [0, n) on `threads` workers pulling indices
/// from a shared counter. Callers write results into slot k, so the output
/// never depends on the schedule. The first exception thrown by any worker is
/// rethrown after all workers stop.
template <typename Body>
void parallel_for(std::size_t n, int threads, Body body)
{
  if (threads < 1) { throw DomainError("parallel_for: threads must be >= 1"); }
  std::size_t const workers = std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t k = 0; k < n; ++k) { body(k, std::size_t{0}); }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&](std::size_t worker) {
    for (;;) {
      std::size_t const k = next.fetch_add(1, std::memory_order_relaxed);
      if (k >= n || failed.load(std::memory_order_relaxed)) { return; }
      try {
        body(k, worker);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) { error = std::current_exception(); }
        failed = true;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) { pool.emplace_back(work, w); }
  work(0);
  for (auto &t : pool) { t.join(); }
  if (error) { std::rethrow_exception(error); }
}

} // namespace gm
