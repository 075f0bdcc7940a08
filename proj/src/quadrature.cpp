#include "qcs/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcs/detail/log_sum.hpp"
#include "qcs/errors.hpp"

namespace qcs {

GaussLegendreRule::GaussLegendreRule(int order) {
  if (order < 1) throw DomainError("GaussLegendreRule: order must be >= 1");
  nodes_.resize(static_cast<std::size_t>(order));
  weights_.resize(static_cast<std::size_t>(order));
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = order * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    nodes_[static_cast<std::size_t>(i)] = -z;
    nodes_[static_cast<std::size_t>(order - 1 - i)] = z;
    weights_[static_cast<std::size_t>(i)] = w;
    weights_[static_cast<std::size_t>(order - 1 - i)] = w;
  }
}

void QuadratureConfig::validate() const {
  if (panel_order < 8) throw DomainError("QuadratureConfig: panel_order must be >= 8");
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureConfig: rel_tol must be positive");
  if (!(max_domain > 1.0)) throw DomainError("QuadratureConfig: max_domain must exceed 1");
  if (panel_split < 1) throw DomainError("QuadratureConfig: panel_split must be >= 1");
}

namespace {

// ln int_a^b exp(log_f) by one Gauss rule.
double log_panel(const std::function<double(double)>& log_f, const GaussLegendreRule& rule,
                 double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  detail::LogSum sum;
  for (int i = 0; i < rule.order(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    sum.add(log_f(mid + half * rule.nodes()[k]) + std::log(rule.weights()[k]));
  }
  return sum.log() + std::log(half);
}

}  // namespace

SemiInfiniteIntegral integrate_log_positive(const std::function<double(double)>& log_f,
                                            const QuadratureConfig& cfg) {
  cfg.validate();
  const GaussLegendreRule rule(cfg.panel_order);
  const double log_tol = std::log(cfg.rel_tol);
  detail::LogSum total;
  double a = 0.0;
  double width = 1.0;
  int panels = 0;
  while (true) {
    const double b = a + width;
    if (b > cfg.max_domain) {
      throw DomainCapReached("integrate_log_positive: domain cap " +
                             std::to_string(cfg.max_domain) + " reached before tail converged");
    }
    detail::LogSum panel;
    const double sub = width / cfg.panel_split;
    for (int s = 0; s < cfg.panel_split; ++s) {
      panel.add(log_panel(log_f, rule, a + s * sub, a + (s + 1) * sub));
    }
    total.add(panel.log());
    ++panels;
    const bool decaying = log_f(b) < log_f(a);
    if (decaying && panel.log() < log_tol + total.log()) {
      return {total.log(), b, panels};
    }
    a = b;
    width *= 2.0;
  }
}

}  // namespace qcs
