#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "qcs/errors.hpp"
#include "qcs/moments.hpp"
#include "qcs/qcore.hpp"
#include "qcs/states.hpp"

using namespace qcs;

TEST(Weights, ValuesAtOrigin) {
  const Deformation d(0.5);
  EXPECT_NEAR(weight_tilde(0.0, d), 0.72134752044448170, 1e-15);
  EXPECT_NEAR(weight(0.0, d), 0.22961204713164259, 1e-15);
  EXPECT_NEAR(weight(0.0, Deformation(1.0)), 1.0 / std::numbers::pi, 1e-16);
  EXPECT_NEAR(weight_tilde(2.0, Deformation(1.0)), std::exp(-2.0), 1e-16);
}

TEST(Weights, MatchOracleProduct) {
  for (double q : {0.6, 0.9}) {
    const Deformation d(q);
    for (double x : {0.5, 3.0, 20.0}) {
      const oracle::Real ql = q;
      const auto e = oracle::jackson_product((1 - ql) * x, ql).real();
      const double expected = static_cast<double>((1 - ql) / std::log(1 / ql) / e);
      EXPECT_NEAR(weight_tilde(x, d) / expected, 1.0, 1e-13);
      const double n = static_cast<double>(oracle::normalization_series(x, q));
      EXPECT_NEAR(weight(x, d) / (n * expected / std::numbers::pi), 1.0, 1e-12);
    }
  }
}

TEST(Moments, ReproduceQFactorials) {
  for (double q : {0.7, 0.8, 0.9}) {
    const Deformation d(q);
    for (int n = 0; n <= 10; ++n) {
      const auto r = moment_integral(n, d);
      EXPECT_DOUBLE_EQ(r.log_analytic, log_q_factorial(n, d));
      EXPECT_LT(r.rel_error, 1e-6) << q << " " << n;
      EXPECT_LT(r.rel_error, 1e-10) << q << " " << n;
    }
  }
}

TEST(Moments, ZerothIsUnity) {
  const auto r = moment_integral(0, Deformation(0.8));
  EXPECT_NEAR(r.numeric, 1.0, 1e-12);
}

TEST(Moments, ClassicalGivesFactorial) {
  const auto r = moment_integral(6, Deformation(1.0));
  EXPECT_NEAR(r.numeric, 720.0, 1e-8);
}

TEST(Moments, LargeOrderInLogDomain) {
  const auto r = moment_integral(60, Deformation(0.9));
  EXPECT_LT(r.rel_error, 1e-8);
  // At q = 0.7 the x^60 peak sits near x ~ 1e9.
  EXPECT_THROW(moment_integral(60, Deformation(0.7)), DomainCapReached);
  QuadratureConfig wide;
  wide.max_domain = 1e14;
  const auto far = moment_integral(60, Deformation(0.7), wide);
  EXPECT_TRUE(std::isinf(far.numeric) || far.numeric > 1e300);
  EXPECT_LT(far.rel_error, 1e-8);
  EXPECT_GT(far.domain_used, 1e6);
}

TEST(Carleman, DeformedSeriesConverges) {
  const auto diag = carleman_diagnostic(Deformation(0.7), 400);
  ASSERT_TRUE(diag.convergence_threshold.has_value());
  EXPECT_LE(*diag.convergence_threshold, 50);
  EXPECT_TRUE(std::isnan(diag.log_ratio[0]));
  for (int n = *diag.convergence_threshold; n <= 400; ++n) EXPECT_LT(diag.log_ratio[n - 1], -1.0);
  EXPECT_GE(diag.log_ratio[*diag.convergence_threshold - 2], -1.0);
}

TEST(Carleman, ClassicalSeriesDiverges) {
  const auto diag = carleman_diagnostic(Deformation(1.0), 300);
  EXPECT_FALSE(diag.convergence_threshold.has_value());
  for (std::size_t i = 1; i < diag.log_ratio.size(); ++i) EXPECT_GT(diag.log_ratio[i], -1.0);
  // a_n ~ sqrt(e/n): partial sums keep growing.
  EXPECT_GT(diag.partial_sums.back(), 20.0);
}

TEST(Carleman, AValues) {
  const Deformation d(0.8);
  const auto diag = carleman_diagnostic(d, 10);
  for (int n = 1; n <= 10; ++n) {
    const double expected =
        static_cast<double>(std::pow(oracle::q_factorial(n, 0.8L), -1.0L / (2 * n)));
    EXPECT_NEAR(diag.a_values[n - 1], expected, 1e-14);
  }
  EXPECT_THROW(carleman_diagnostic(d, 9), DomainError);
}
