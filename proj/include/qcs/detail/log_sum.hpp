#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "qcs/deformation.hpp"
#include "qcs/errors.hpp"

namespace qcs::detail {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Running sum of positive terms supplied as logarithms.
class LogSum {
 public:
  void add(double log_term) {
    if (log_term == kNegInf) return;
    if (log_term <= max_) {
      scaled_ += std::exp(log_term - max_);
    } else {
      scaled_ = scaled_ * std::exp(max_ - log_term) + 1.0;
      max_ = log_term;
    }
  }

  double log() const { return max_ == kNegInf ? kNegInf : max_ + std::log(scaled_); }
  bool empty() const { return max_ == kNegInf; }

 private:
  double max_ = kNegInf;
  double scaled_ = 0.0;
};

/// n * ln x with the convention 0 * ln 0 = 0.
inline double log_power(double x, int n) {
  if (n == 0) return 0.0;
  if (x == 0.0) return kNegInf;
  return n * std::log(x);
}

struct LogSeriesResult {
  double log_value;
  int terms;
  /// Magnitude of the last accepted term relative to the sum.
  double rel_error;
};

/// Sums exp(log_term(n)) for n = first, first+1, ... under `ctrl`.
/// The first term must be nonzero; an all-zero series never terminates.
///
/// `lookahead` extra consecutive terms must also pass the stopping test
/// before the series is declared converged.
template <class LogTerm>
LogSeriesResult sum_log_series(LogTerm&& log_term, int first, const SeriesControl& ctrl,
                               int lookahead = 0, const char* what = "series") {
  const double log_tol = std::log(ctrl.rel_tol);
  LogSum sum;
  double previous = std::numeric_limits<double>::infinity();
  int passed = 0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    const int n = first + k;
    const double t = log_term(n);
    sum.add(t);
    const bool decreasing = t < previous || t == kNegInf;
    const bool small = !sum.empty() && (t == kNegInf || t < log_tol + sum.log());
    previous = t;
    if (decreasing && small) {
      if (++passed > lookahead) {
        const double rel = t == kNegInf ? 0.0 : std::exp(t - sum.log());
        return {sum.log(), k + 1, rel};
      }
    } else {
      passed = 0;
    }
  }
  throw NonConvergence(std::string(what) + ": term cap " + std::to_string(ctrl.max_terms) +
                       " reached before tolerance");
}

}  // namespace qcs::detail
