#ifndef FROBKIT_PARALLEL_HPP
#define FROBKIT_PARALLEL_HPP

#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

#include <omp.h>

namespace frobkit {

/// Worker count used by the parallel sweeps; 0 leaves the OpenMP default.
inline unsigned& sweep_jobs() {
  static unsigned jobs = 0;
  return jobs;
}

template <class F>
auto serial_map(std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  std::vector<std::invoke_result_t<F&, std::size_t>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

/// f(0..n-1) evaluated under OpenMP; results in index order. The first
/// exception by index is rethrown after the loop.
template <class F>
auto parallel_map(std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const int threads = sweep_jobs() ? static_cast<int>(sweep_jobs()) : omp_get_max_threads();
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    try {
      slots[static_cast<std::size_t>(i)].emplace(f(static_cast<std::size_t>(i)));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace frobkit

#endif  // FROBKIT_PARALLEL_HPP
