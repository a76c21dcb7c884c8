#pragma once

#include <cstdlib>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tqa {

// Verification checks are independent of each other, so the drivers fan
// them out with OpenMP. The serial path is kept as the reference; tests
// compare both and the bench target times them against each other.
enum class RunMode { Serial, Parallel };

inline RunMode default_run_mode() {
#ifdef _OPENMP
  if (const char* v = std::getenv("TQA_SERIAL"); v && v[0] == '1') return RunMode::Serial;
  return RunMode::Parallel;
#else
  return RunMode::Serial;
#endif
}

// results[i] = fn(i); exceptions are collected and the first one rethrown.
template <class T, class Fn>
std::vector<T> run_indexed(std::size_t n, Fn&& fn, RunMode mode = default_run_mode()) {
  std::vector<T> results(n);
  if (mode == RunMode::Serial) {
    for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
  }
  std::exception_ptr first_error = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < (long long)n; ++i) {
    try {
      results[i] = fn(std::size_t(i));
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (!first_error) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace tqa
