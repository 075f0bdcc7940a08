#include "qcs/states.hpp"

#include <cmath>
#include <string>

#include "qcs/detail/log_sum.hpp"
#include "qcs/errors.hpp"
#include "qcs/qcore.hpp"

namespace qcs {

namespace {

void require_intensity(double x, const char* what) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": x must be finite and >= 0");
  }
}

double log_falling_factorial(int n, int r) {
  return log_factorial(n) - log_factorial(n - r);
}

}  // namespace

StateLabel::StateLabel(std::complex<double> z) : z_(z), x_(std::norm(z)) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("StateLabel: z must be finite");
  }
}

StateLabel StateLabel::real_from_intensity(double x) {
  require_intensity(x, "StateLabel::real_from_intensity");
  return StateLabel({std::sqrt(x), 0.0});
}

double log_normalization(double x, const Deformation& d, const SeriesControl& ctrl) {
  require_intensity(x, "normalization");
  if (d.classical()) return x;
  return log_jackson_E(d.one_minus_q() * d.q() * x, d, ctrl);
}

double normalization(double x, const Deformation& d, const SeriesControl& ctrl) {
  return std::exp(log_normalization(x, d, ctrl));
}

double log_normalization_series(double x, const Deformation& d, const SeriesControl& ctrl) {
  require_intensity(x, "normalization_series");
  if (x == 0.0) return 0.0;
  const double log_x = std::log(x);
  return detail::sum_log_series(
             [&](int n) { return n * log_x - log_q_factorial(n, d); }, 0, ctrl, 0,
             "normalization_series")
      .log_value;
}

double log_normalization_derivative(double x, int order, const Deformation& d,
                                    const SeriesControl& ctrl) {
  require_intensity(x, "normalization_derivative");
  if (order < 0) throw DomainError("normalization_derivative: order must be >= 0");
  if (d.classical()) return x;
  if (x == 0.0) return log_factorial(order) - log_q_factorial(order, d);
  const double log_x = std::log(x);
  return detail::sum_log_series(
             [&](int n) {
               return log_falling_factorial(n, order) + (n - order) * log_x -
                      log_q_factorial(n, d);
             },
             order, ctrl, 0, "normalization_derivative")
      .log_value;
}

double normalization_derivative(double x, int order, const Deformation& d,
                                const SeriesControl& ctrl) {
  return std::exp(log_normalization_derivative(x, order, d, ctrl));
}

std::complex<double> overlap(const StateLabel& z1, const StateLabel& z2, const Deformation& d,
                             const SeriesControl& ctrl) {
  const std::complex<double> w = std::conj(z2.z()) * z1.z();
  const double half_norms =
      0.5 * (log_normalization(z1.x(), d, ctrl) + log_normalization(z2.x(), d, ctrl));
  if (d.classical()) return std::exp(w - half_norms);
  try {
    return std::exp(log_jackson_E(d.one_minus_q() * d.q() * w, d, ctrl) - half_norms);
  } catch (const DomainError&) {
    return 0.0;  // a vanishing factor of E_q
  }
}

double photon_probability(int n, double x, const Deformation& d, const SeriesControl& ctrl) {
  if (n < 0) throw DomainError("photon_probability: n must be >= 0");
  require_intensity(x, "photon_probability");
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::exp(n * std::log(x) - log_q_factorial(n, d) - log_normalization(x, d, ctrl));
}

double s_factor(SFactorKey key, double x, const Deformation& d, const SeriesControl& ctrl) {
  if (key.p < 0 || key.r < 0) throw DomainError("s_factor: p and r must be >= 0");
  require_intensity(x, "s_factor");
  if (d.classical()) return 1.0;
  const auto [p, r] = key;
  auto log_ratio = [&](int n) {
    return 0.5 * (log_factorial(n + p) + log_factorial(n + r) -
                  log_q_factorial(n + p, d) - log_q_factorial(n + r, d));
  };
  if (x == 0.0) return std::exp(log_ratio(0));
  const double log_x = std::log(x);
  const auto sum = detail::sum_log_series(
      [&](int n) { return log_ratio(n) + n * log_x - log_factorial(n); }, 0, ctrl, 2,
      "s_factor");
  return std::exp(sum.log_value - log_normalization(x, d, ctrl));
}

double mean_photon_number(double x, const Deformation& d, const SeriesControl& ctrl) {
  require_intensity(x, "mean_photon_number");
  if (d.classical()) return x;
  if (x == 0.0) return 0.0;
  return x * std::exp(log_normalization_derivative(x, 1, d, ctrl) - log_normalization(x, d, ctrl));
}

}  // namespace qcs
