#pragma once

#include <complex>

#include "qcs/deformation.hpp"

namespace qcs {

/// Coherent-state label z with cached intensity x = |z|^2.
class StateLabel {
 public:
  explicit StateLabel(std::complex<double> z);

  /// Real positive label z = sqrt(x).
  static StateLabel real_from_intensity(double x);

  std::complex<double> z() const noexcept { return z_; }
  double x() const noexcept { return x_; }

 private:
  std::complex<double> z_;
  double x_;
};

/// N_q(x) = sum_n x^n/[n]_q! = E_q[(1-q) q x]; exp(x) when classical.
double normalization(double x, const Deformation& d, const SeriesControl& ctrl = {});

/// ln N_q(x).
double log_normalization(double x, const Deformation& d, const SeriesControl& ctrl = {});

/// ln N_q(x) from the power series sum_n x^n/[n]_q! instead of the product.
double log_normalization_series(double x, const Deformation& d, const SeriesControl& ctrl = {});

/// d^r N_q/dx^r = sum_{n>=r} n!/(n-r)! x^{n-r}/[n]_q!.
double normalization_derivative(double x, int order, const Deformation& d,
                                const SeriesControl& ctrl = {});

/// ln of normalization_derivative.
double log_normalization_derivative(double x, int order, const Deformation& d,
                                    const SeriesControl& ctrl = {});

/// q<z2|z1>q = [N_q(|z1|^2) N_q(|z2|^2)]^{-1/2} E_q[(1-q) q z2* z1].
std::complex<double> overlap(const StateLabel& z1, const StateLabel& z2, const Deformation& d,
                             const SeriesControl& ctrl = {});

/// p_q(n, x) = x^n / (N_q(x) [n]_q!); Poisson when classical.
double photon_probability(int n, double x, const Deformation& d, const SeriesControl& ctrl = {});

/// Index pair (p, r) of the monomial (a^dagger)^p a^r.
struct SFactorKey {
  int p = 0;
  int r = 0;
};

/// S^(p,r)_q(x) = N_q(x)^{-1} sum_n sqrt((n+p)!(n+r)!/([n+p]_q! [n+r]_q!)) x^n/n!.
///
/// <(a^dagger)^p a^r> = (z*)^p z^r S^(p,r). Symmetric in (p, r); 1 when classical.
double s_factor(SFactorKey key, double x, const Deformation& d, const SeriesControl& ctrl = {});

/// <N>_q = x N'_q(x) / N_q(x).
double mean_photon_number(double x, const Deformation& d, const SeriesControl& ctrl = {});

/// sum_n f(n) p_q(n, x) for f(n) = exp(log_f(n)) >= 0.
///
/// `first` must be the first n with f(n) > 0 (requires x > 0 if first > 0).
template <class LogF>
double number_expectation(double x, const Deformation& d, LogF&& log_f, int first = 0,
                          const SeriesControl& ctrl = {});

}  // namespace qcs

#include "qcs/detail/number_expectation.hpp"
