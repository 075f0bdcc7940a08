#pragma once

#include <optional>
#include <vector>

#include "qcs/deformation.hpp"
#include "qcs/quadrature.hpp"

namespace qcs {

/// W~_q(x) = (1-q)/ln(1/q) / E_q[(1-q) x]; e^{-x} when classical.
double weight_tilde(double x, const Deformation& d, const SeriesControl& ctrl = {});
double log_weight_tilde(double x, const Deformation& d, const SeriesControl& ctrl = {});

/// W_q(x) = N_q(x) W~_q(x) / pi; 1/pi when classical.
double weight(double x, const Deformation& d, const SeriesControl& ctrl = {});

/// Quadrature of int_0^inf x^n W~_q(x) dx against ln [n]_q!.
struct MomentReport {
  int n;
  /// ln [n]_q!.
  double log_analytic;
  /// Quadrature value (inf if it overflows a double; see log_numeric).
  double numeric;
  double log_numeric;
  /// |numeric - [n]_q!| / [n]_q!, formed from the log difference.
  double rel_error;
  double domain_used;
  int panels;
};

MomentReport moment_integral(int n, const Deformation& d, const QuadratureConfig& qcfg = {},
                             const SeriesControl& ctrl = {});

/// Carleman series diagnostic for the moment sequence [n]_q!.
struct CarlemanDiagnostic {
  Deformation q;
  /// a_n = ([n]_q!)^{-1/(2n)} for n = 1..n_max (index n-1).
  std::vector<double> a_values;
  std::vector<double> partial_sums;
  /// ln a_n / ln n; NaN at n = 1.
  std::vector<double> log_ratio;
  /// Smallest n0 with log_ratio < -1 for every n0 <= n <= n_max, if any.
  std::optional<int> convergence_threshold;
};

/// Throws DomainError unless n_max >= 10.
CarlemanDiagnostic carleman_diagnostic(const Deformation& d, int n_max);

}  // namespace qcs
