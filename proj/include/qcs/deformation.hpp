#pragma once

namespace qcs {

/// Validated deformation parameter 0 < q <= 1.
///
/// q = 1 is the classical (undeformed) limit. Every operation checks
/// `classical()` and switches to the closed-form conventional result
/// instead of evaluating the deformed formulas near their limit.
class Deformation {
 public:
  /// Throws InvalidDeformation unless 0 < q <= 1.
  explicit Deformation(double q);

  static Deformation classical_limit() { return Deformation(1.0); }

  double q() const noexcept { return q_; }
  bool classical() const noexcept { return classical_; }
  /// ln q (<= 0).
  double log_q() const noexcept { return log_q_; }
  /// 1 - q, computed once.
  double one_minus_q() const noexcept { return one_minus_q_; }

  friend bool operator==(const Deformation&, const Deformation&) = default;

 private:
  double q_;
  double log_q_;
  double one_minus_q_;
  bool classical_;
};

/// Convergence policy shared by all infinite series and products.
///
/// A series stops at the first term whose magnitude is below
/// `rel_tol` times the partial sum while term magnitudes are decreasing.
/// Reaching `max_terms` first raises NonConvergence.
struct SeriesControl {
  double rel_tol = 1e-14;
  int max_terms = 10000;

  SeriesControl() = default;
  /// Throws DomainError unless rel_tol > 0 and max_terms >= 1.
  SeriesControl(double rel_tol, int max_terms);
};

}  // namespace qcs
