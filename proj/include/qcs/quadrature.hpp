#pragma once

#include <functional>
#include <vector>

namespace qcs {

/// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendreRule {
 public:
  /// Nodes by Newton iteration on P_order from Chebyshev initial guesses.
  explicit GaussLegendreRule(int order);

  int order() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

struct QuadratureConfig {
  /// Gauss nodes per panel.
  int panel_order = 64;
  double rel_tol = 1e-10;
  /// Hard cap on the upper integration limit.
  double max_domain = 1e6;
  /// Each geometric panel is split into this many equal sub-panels.
  int panel_split = 1;

  /// Throws DomainError unless panel_order >= 8, rel_tol > 0, max_domain > 1 and panel_split >= 1.
  void validate() const;
};

struct SemiInfiniteIntegral {
  double log_value;
  /// Upper limit actually reached.
  double domain_used;
  int panels;
};

/// ln of int_0^inf exp(log_f(x)) dx for a positive integrand.
///
/// Panels are [0,1], [1,3], [3,7], ... (each twice the width of the last).
/// Integration stops once a panel in the decaying region contributes less
/// than rel_tol of the running total; DomainCapReached if max_domain comes first.
SemiInfiniteIntegral integrate_log_positive(const std::function<double(double)>& log_f,
                                            const QuadratureConfig& cfg);

}  // namespace qcs
