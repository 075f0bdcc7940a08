#pragma once

#include "qcs/deformation.hpp"
#include "qcs/states.hpp"

namespace qcs {

/// omega_q(x) = N'/N + x [N''/N - (N'/N)^2]; 1 when classical.
double metric_factor(double x, const Deformation& d, const SeriesControl& ctrl = {});

/// Q_q(x) = x (N''/N' - N'/N); 0 when classical and at x = 0.
double mandel_q(double x, const Deformation& d, const SeriesControl& ctrl = {});

struct QuadratureVariances {
  double var_x;
  double var_p;
};

/// Variances of X = (a + a^dagger)/sqrt2 and P = (a - a^dagger)/(i sqrt2) in |z>_q.
QuadratureVariances quadrature_variances(const StateLabel& z, const Deformation& d,
                                         const SeriesControl& ctrl = {});

/// R_q(x) = 2 (Delta X)^2 at real z = sqrt(x).
double squeezing_ratio(double x, const Deformation& d, const SeriesControl& ctrl = {});

struct SnrBounds {
  /// sigma_q = <X>^2 / (Delta X)^2 at real z = sqrt(x).
  double sigma;
  /// 4 <N>_q, the coherent-state value.
  double lower;
  /// 4 <N>_q (<N>_q + 1), the squeezed-state bound.
  double upper;
};

/// Signal-to-quantum-noise ratio and its reference values; zeros at x = 0.
SnrBounds snr(double x, const Deformation& d, const SeriesControl& ctrl = {});

struct RhoValue {
  int n;
  double value;
};

/// rho_q(n) = ([n+1]_q/[n]_q) / ((n+1)/n), n >= 1.
RhoValue rho_characteristic(int n, const Deformation& d);

/// (Delta X_b)^2 = (1/2) { N_q^{-1} sum_n [n+1]_q x^n/[n]_q! - x }.
double deformed_variance(double x, const Deformation& d, const SeriesControl& ctrl = {});

/// (1/2)(<[N+1]_q> - <[N]_q>), both expectations summed as series.
double deformed_variance_split(double x, const Deformation& d, const SeriesControl& ctrl = {});

/// (1/2) <q^{-N-1}> = (1/2) |<[X_b, P_b]>|.
double deformed_variance_commutator(double x, const Deformation& d,
                                    const SeriesControl& ctrl = {});

/// R_bq(x) = 2 q (Delta X_b)^2.
double deformed_squeezing_ratio(double x, const Deformation& d, const SeriesControl& ctrl = {});

/// sigma_bq = 2 x / (Delta X_b)^2 at real z = sqrt(x); 0 at x = 0.
double deformed_snr(double x, const Deformation& d, const SeriesControl& ctrl = {});

/// Every observable of |z>_q in one record. Squeezing and SNR fields
/// are evaluated at the real label sqrt(|z|^2).
struct ObservableSet {
  Deformation q;
  StateLabel z;
  double mean_n;
  double metric;
  double mandel_q;
  double var_x;
  double var_p;
  double r_ratio;
  double snr;
  double snr_lower;
  double snr_upper;
  double var_xb;
  double r_b_ratio;
  double snr_b;
};

ObservableSet observables(const StateLabel& z, const Deformation& d, const SeriesControl& ctrl = {});

}  // namespace qcs
