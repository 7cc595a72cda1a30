#pragma once

#include <cstddef>
#include <span>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace eigenbound {

// Execution policy for the data-parallel kernels. Every kernel writes
// per-index slots and reduces in a fixed order, so SERIAL and PARALLEL
// produce bitwise-identical results; the serial path is kept as the
// reference implementation for tests and benchmarks.
enum class Exec { SERIAL, PARALLEL };

namespace detail {
inline Exec& default_exec_slot() {
  static Exec e = Exec::PARALLEL;
  return e;
}
}  // namespace detail

inline Exec default_exec() { return detail::default_exec_slot(); }
inline void set_default_exec(Exec e) { detail::default_exec_slot() = e; }

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_thread_count(int n) {
#if defined(_OPENMP)
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Runs fn(i) for i in [0, n). Results must go to index-i slots only.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, Exec exec = default_exec()) {
  if (exec == Exec::PARALLEL) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<std::size_t>(i));
    return;
#endif
  }
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

// Fixed-order pairwise summation: the result depends only on the slot
// contents, never on thread count or schedule.
inline double pairwise_sum(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n <= 16) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

inline double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(std::span<const double>(v.data(), v.size()));
}

}  // namespace eigenbound
