#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

namespace qcs {

enum class Execution { serial, parallel };

/// Serial reference: out[i] = fn(i) for i in [0, count). The result type
/// must be default-constructible.
template <class Fn>
auto map_indices_serial(std::size_t count, Fn&& fn) {
  using Result = std::decay_t<std::invoke_result_t<Fn&, std::size_t>>;
  std::vector<Result> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

/// OpenMP version of map_indices_serial with identical results.
///
/// Each index is evaluated independently, so the output does not depend on
/// thread count or schedule. If any evaluation throws, the exception of
/// the lowest failing index is rethrown after the loop.
template <class Fn>
auto map_indices_parallel(std::size_t count, Fn&& fn) {
  using Result = std::decay_t<std::invoke_result_t<Fn&, std::size_t>>;
  std::vector<Result> out(count);
  std::exception_ptr error;
  std::size_t error_index = std::numeric_limits<std::size_t>::max();
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = fn(k);
    } catch (...) {
#pragma omp critical(qcs_sweep_error)
      {
        if (k < error_index) {
          error_index = k;
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

template <class Fn>
auto map_indices(std::size_t count, Fn&& fn, Execution exec = Execution::parallel) {
  if (exec == Execution::serial) return map_indices_serial(count, fn);
  return map_indices_parallel(count, fn);
}

/// fn evaluated at every grid point.
template <class Fn>
auto evaluate_grid(std::span<const double> xs, Fn&& fn, Execution exec = Execution::parallel) {
  return map_indices(xs.size(), [&](std::size_t i) { return fn(xs[i]); }, exec);
}

/// points uniformly spaced values lo..hi inclusive (points >= 2), or {lo} if points == 1.
std::vector<double> linspace(double lo, double hi, int points);

/// Number of OpenMP threads available to parallel sweeps (1 without OpenMP).
int sweep_threads();

}  // namespace qcs
