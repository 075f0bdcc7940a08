#pragma once

#include <cmath>

#include "qcs/detail/log_sum.hpp"
#include "qcs/qcore.hpp"

namespace qcs {

template <class LogF>
double number_expectation(double x, const Deformation& d, LogF&& log_f, int first,
                          const SeriesControl& ctrl) {
  if (!(x >= 0.0)) throw DomainError("number_expectation: x must be >= 0");
  if (x == 0.0 && first > 0) return 0.0;
  const double log_x = x > 0.0 ? std::log(x) : 0.0;
  // Running ln(x^n/[n]_q!) for n = first..; classical uses n! directly.
  double log_weight = x > 0.0 ? first * log_x - log_q_factorial(first, d) : 0.0;
  int expected = first;
  auto term = [&](int n) {
    if (x == 0.0) return n == 0 ? log_f(0) : detail::kNegInf;
    while (expected < n) {
      ++expected;
      log_weight += log_x - log_q_number(expected, d);
    }
    return log_f(n) + log_weight;
  };
  const auto sum =
      detail::sum_log_series(term, first, ctrl, 1, "number_expectation");
  const double log_norm = d.classical() ? x : log_jackson_E(d.one_minus_q() * d.q() * x, d, ctrl);
  return std::exp(sum.log_value - log_norm);
}

}  // namespace qcs
