#include "qcs/observables.hpp"

#include <cmath>

#include "qcs/errors.hpp"
#include "qcs/qcore.hpp"

namespace qcs {

namespace {

// N^{(r)}/N for r = 1, 2 sharing one evaluation of ln N.
struct DerivativeRatios {
  double first;
  double second;
  double second_over_first;
};

DerivativeRatios derivative_ratios(double x, const Deformation& d, const SeriesControl& ctrl) {
  const double l0 = log_normalization(x, d, ctrl);
  const double l1 = log_normalization_derivative(x, 1, d, ctrl);
  const double l2 = log_normalization_derivative(x, 2, d, ctrl);
  return {std::exp(l1 - l0), std::exp(l2 - l0), std::exp(l2 - l1)};
}

double expect_q_number_shifted(double x, const Deformation& d, const SeriesControl& ctrl) {
  return number_expectation(
      x, d, [&](int n) { return log_q_number(n + 1, d); }, 0, ctrl);
}

}  // namespace

double metric_factor(double x, const Deformation& d, const SeriesControl& ctrl) {
  if (!(x >= 0.0)) throw DomainError("metric_factor: x must be >= 0");
  if (d.classical()) return 1.0;
  const auto r = derivative_ratios(x, d, ctrl);
  return r.first + x * (r.second - r.first * r.first);
}

double mandel_q(double x, const Deformation& d, const SeriesControl& ctrl) {
  if (!(x >= 0.0)) throw DomainError("mandel_q: x must be >= 0");
  if (d.classical() || x == 0.0) return 0.0;
  const auto r = derivative_ratios(x, d, ctrl);
  return x * (r.second_over_first - r.first);
}

QuadratureVariances quadrature_variances(const StateLabel& z, const Deformation& d,
                                         const SeriesControl& ctrl) {
  if (d.classical()) return {0.5, 0.5};
  const double x = z.x();
  const double s10 = s_factor({1, 0}, x, d, ctrl);
  const double s20 = s_factor({2, 0}, x, d, ctrl);
  const double s11 = s_factor({1, 1}, x, d, ctrl);
  const double coherent = s20 - s10 * s10;
  const double common = x * (s11 - s20) + 0.5;
  const double re = z.z().real();
  const double im = z.z().imag();
  return {2.0 * re * re * coherent + common, 2.0 * im * im * coherent + common};
}

double squeezing_ratio(double x, const Deformation& d, const SeriesControl& ctrl) {
  return 2.0 * quadrature_variances(StateLabel::real_from_intensity(x), d, ctrl).var_x;
}

SnrBounds snr(double x, const Deformation& d, const SeriesControl& ctrl) {
  const StateLabel z = StateLabel::real_from_intensity(x);
  if (x == 0.0) return {0.0, 0.0, 0.0};
  const double n_mean = mean_photon_number(x, d, ctrl);
  const double var_x = quadrature_variances(z, d, ctrl).var_x;
  if (!(var_x > 0.0)) throw DivisionDegenerate("snr: quadrature variance underflowed");
  const double s10 = s_factor({1, 0}, x, d, ctrl);
  return {2.0 * x * s10 * s10 / var_x, 4.0 * n_mean, 4.0 * n_mean * (n_mean + 1.0)};
}

RhoValue rho_characteristic(int n, const Deformation& d) {
  if (n < 1) throw DomainError("rho_characteristic: n must be >= 1");
  if (d.classical()) return {n, 1.0};
  const double ratio = std::exp(log_q_number(n + 1, d) - log_q_number(n, d));
  return {n, ratio * n / (n + 1.0)};
}

double deformed_variance(double x, const Deformation& d, const SeriesControl& ctrl) {
  if (!(x >= 0.0)) throw DomainError("deformed_variance: x must be >= 0");
  if (d.classical()) return 0.5;
  return 0.5 * (expect_q_number_shifted(x, d, ctrl) - x);
}

double deformed_variance_split(double x, const Deformation& d, const SeriesControl& ctrl) {
  if (!(x >= 0.0)) throw DomainError("deformed_variance_split: x must be >= 0");
  if (d.classical()) return 0.5;
  const double upper = expect_q_number_shifted(x, d, ctrl);
  const double lower =
      number_expectation(x, d, [&](int n) { return log_q_number(n, d); }, 1, ctrl);
  return 0.5 * (upper - lower);
}

double deformed_variance_commutator(double x, const Deformation& d, const SeriesControl& ctrl) {
  if (!(x >= 0.0)) throw DomainError("deformed_variance_commutator: x must be >= 0");
  if (d.classical()) return 0.5;
  return 0.5 * number_expectation(x, d, [&](int n) { return -(n + 1) * d.log_q(); }, 0, ctrl);
}

double deformed_squeezing_ratio(double x, const Deformation& d, const SeriesControl& ctrl) {
  return 2.0 * d.q() * deformed_variance(x, d, ctrl);
}

double deformed_snr(double x, const Deformation& d, const SeriesControl& ctrl) {
  if (!(x >= 0.0)) throw DomainError("deformed_snr: x must be >= 0");
  if (x == 0.0) return 0.0;
  const double var = deformed_variance(x, d, ctrl);
  if (!(var > 0.0)) throw DivisionDegenerate("deformed_snr: variance underflowed");
  return 2.0 * x / var;
}

ObservableSet observables(const StateLabel& z, const Deformation& d, const SeriesControl& ctrl) {
  const double x = z.x();
  const auto variances = quadrature_variances(z, d, ctrl);
  const auto ratio = snr(x, d, ctrl);
  return ObservableSet{
      .q = d,
      .z = z,
      .mean_n = mean_photon_number(x, d, ctrl),
      .metric = metric_factor(x, d, ctrl),
      .mandel_q = mandel_q(x, d, ctrl),
      .var_x = variances.var_x,
      .var_p = variances.var_p,
      .r_ratio = squeezing_ratio(x, d, ctrl),
      .snr = ratio.sigma,
      .snr_lower = ratio.lower,
      .snr_upper = ratio.upper,
      .var_xb = deformed_variance(x, d, ctrl),
      .r_b_ratio = deformed_squeezing_ratio(x, d, ctrl),
      .snr_b = deformed_snr(x, d, ctrl),
  };
}

}  // namespace qcs
