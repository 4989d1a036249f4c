#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include <omp.h>

namespace pairzeta {

enum class Exec { serial, parallel };

// Runs body(i) for 0 <= i < n. The first exception thrown by any iteration is
// rethrown on the calling thread after the loop.
template <class Body>
void parallel_for(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

inline int worker_count(Exec exec) { return exec == Exec::serial ? 1 : omp_get_max_threads(); }

}  // namespace pairzeta
