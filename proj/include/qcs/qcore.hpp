#pragma once

#include <complex>
#include <vector>

#include "qcs/deformation.hpp"

namespace qcs {

/// ln n!, tabulated (safe for concurrent use, unlike std::lgamma).
double log_factorial(int n);

/// [n]_q = (1 - q^-n)/(q - 1), evaluated as q^-n (1 - q^n)/(1 - q).
/// Returns n on the classical branch.
double q_number(int n, const Deformation& d);

/// Maths-type {n}_q = (1 - q^n)/(1 - q); n when classical.
double q_number_maths(int n, const Deformation& d);

/// ln [n]_q for n >= 1, overflow-free for any n.
double log_q_number(int n, const Deformation& d);

/// ln([n]_q!) = sum_{k<=n} ln [k]_q, served from a per-thread memo.
double log_q_factorial(int n, const Deformation& d);

/// ln Gamma_q(m) = sum_{k<m} ln {k}_q for integer m >= 1.
double log_q_gamma(int m, const Deformation& d);

/// d_q(n) = [n]_q!/n!.
double d_ratio(int n, const Deformation& d);

/// Table of ln([n]_q!) for n = 0..n_max built by the direct product.
///
/// Immutable after construction. `via_gamma(n)` recomputes entry n through
/// the q-gamma split  -n(n+1)/2 ln q + ln Gamma_q(n+1)  for cross-checks.
class LogFactorialTable {
 public:
  LogFactorialTable(const Deformation& d, int n_max);

  const Deformation& deformation() const noexcept { return d_; }
  int n_max() const noexcept { return static_cast<int>(log_values_.size()) - 1; }
  double operator[](int n) const { return log_values_.at(static_cast<std::size_t>(n)); }
  const std::vector<double>& values() const noexcept { return log_values_; }

  double via_gamma(int n) const;

 private:
  Deformation d_;
  std::vector<double> log_values_;
};

/// Result of a Jackson E_q evaluation.
struct JacksonValue {
  std::complex<double> value;
  /// Explicit factors multiplied before the tail series took over.
  int factors = 0;
  /// Some factor 1 + q^k w was exactly zero; value is 0.
  bool zero_factor = false;
};

/// E_q(w) = prod_{k>=0} (1 + q^k w).
///
/// Factors are multiplied while |q^k w| >= 1/2; the remaining tail is
/// summed through ln prod_{k>=K}(1 + q^k w') = sum_m (-1)^{m+1} w'^m / (m (1 - q^m)).
/// Throws InvalidDeformation on the classical branch and NonConvergence
/// when more than ctrl.max_terms factors would be needed.
JacksonValue jackson_E(std::complex<double> w, const Deformation& d,
                       const SeriesControl& ctrl = {});

/// Complex logarithm of E_q(w) (imaginary part not reduced mod 2 pi).
/// Throws DomainError if a factor vanishes.
std::complex<double> log_jackson_E(std::complex<double> w, const Deformation& d,
                                   const SeriesControl& ctrl = {});

/// ln E_q(w) for real w > -1, where every factor is positive.
double log_jackson_E(double w, const Deformation& d, const SeriesControl& ctrl = {});

}  // namespace qcs
