#include "qcs/moments.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qcs/errors.hpp"
#include "qcs/qcore.hpp"
#include "qcs/states.hpp"

namespace qcs {

double log_weight_tilde(double x, const Deformation& d, const SeriesControl& ctrl) {
  if (!(x >= 0.0)) throw DomainError("weight_tilde: x must be >= 0");
  if (d.classical()) return -x;
  const double log_prefactor = std::log(d.one_minus_q()) - std::log(-d.log_q());
  return log_prefactor - log_jackson_E(d.one_minus_q() * x, d, ctrl);
}

double weight_tilde(double x, const Deformation& d, const SeriesControl& ctrl) {
  return std::exp(log_weight_tilde(x, d, ctrl));
}

double weight(double x, const Deformation& d, const SeriesControl& ctrl) {
  if (d.classical()) {
    if (!(x >= 0.0)) throw DomainError("weight: x must be >= 0");
    return std::numbers::inv_pi;
  }
  return std::exp(log_normalization(x, d, ctrl) + log_weight_tilde(x, d, ctrl)) *
         std::numbers::inv_pi;
}

MomentReport moment_integral(int n, const Deformation& d, const QuadratureConfig& qcfg,
                             const SeriesControl& ctrl) {
  if (n < 0) throw DomainError("moment_integral: n must be >= 0");
  const auto integral = integrate_log_positive(
      [&](double x) { return (n == 0 ? 0.0 : n * std::log(x)) + log_weight_tilde(x, d, ctrl); },
      qcfg);
  const double log_analytic = log_q_factorial(n, d);
  const double log_numeric = integral.log_value;
  return MomentReport{
      .n = n,
      .log_analytic = log_analytic,
      .numeric = std::exp(log_numeric),
      .log_numeric = log_numeric,
      .rel_error = std::abs(std::expm1(log_numeric - log_analytic)),
      .domain_used = integral.domain_used,
      .panels = integral.panels,
  };
}

CarlemanDiagnostic carleman_diagnostic(const Deformation& d, int n_max) {
  if (n_max < 10) throw DomainError("carleman_diagnostic: n_max must be >= 10");
  CarlemanDiagnostic out{.q = d, .a_values = {}, .partial_sums = {}, .log_ratio = {},
                         .convergence_threshold = std::nullopt};
  double partial = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double log_a = -log_q_factorial(n, d) / (2.0 * n);
    partial += std::exp(log_a);
    out.a_values.push_back(std::exp(log_a));
    out.partial_sums.push_back(partial);
    out.log_ratio.push_back(n == 1 ? std::numeric_limits<double>::quiet_NaN()
                                   : log_a / std::log(static_cast<double>(n)));
  }
  // Scan back from n_max while the ratio stays below -1.
  int threshold = n_max + 1;
  for (int n = n_max; n >= 2; --n) {
    if (!(out.log_ratio[static_cast<std::size_t>(n - 1)] < -1.0)) break;
    threshold = n;
  }
  if (threshold <= n_max) out.convergence_threshold = threshold;
  return out;
}

}  // namespace qcs
