#pragma once

// Index-range check kernel: an OpenMP version and the serial reference it is
// tested against. Both report the smallest failing index.

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>

namespace pqknot {

enum class Execution { serial, parallel };

/// Smallest i in [first, last] with check(i) == false, or nullopt.
/// An exception thrown by check(i) counts as a failure at i and is rethrown
/// if i turns out to be the smallest failing index.
template <class Check>
std::optional<long> first_failure_serial(long first, long last, Check&& check) {
  for (long i = first; i <= last; ++i)
    if (!check(i)) return i;
  return std::nullopt;
}

template <class Check>
std::optional<long> first_failure_parallel(long first, long last, Check&& check) {
  if (last < first) return std::nullopt;
  std::atomic<long> lowest{last + 1};
  std::exception_ptr error;
  long error_index = last + 1;
  std::mutex error_mutex;

#pragma omp parallel for schedule(dynamic, 1)
  for (long i = first; i <= last; ++i) {
    // Indices above a known failure cannot change the answer.
    if (i > lowest.load(std::memory_order_relaxed)) continue;
    bool ok = false;
    try {
      ok = check(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
    if (!ok) {
      long seen = lowest.load(std::memory_order_relaxed);
      while (i < seen && !lowest.compare_exchange_weak(seen, i, std::memory_order_relaxed)) {
      }
    }
  }

  const long found = lowest.load();
  if (found > last) return std::nullopt;
  if (error && error_index == found) std::rethrow_exception(error);
  return found;
}

template <class Check>
std::optional<long> first_failure(long first, long last, Check&& check, Execution exec) {
  if (exec == Execution::serial) return first_failure_serial(first, last, check);
  return first_failure_parallel(first, last, check);
}

}  // namespace pqknot
