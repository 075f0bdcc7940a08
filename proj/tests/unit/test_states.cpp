#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "oracle.hpp"
#include "qcs/errors.hpp"
#include "qcs/qcore.hpp"
#include "qcs/states.hpp"

using namespace qcs;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Normalization, KnownValue) {
  EXPECT_NEAR(normalization(1.0, Deformation(0.5)), 1.589487352687581149, 4e-15);
  EXPECT_DOUBLE_EQ(normalization(0.0, Deformation(0.7)), 1.0);
  EXPECT_NEAR(normalization(2.0, Deformation(1.0)), std::exp(2.0), 1e-14);
}

TEST(Normalization, ProductAndSeriesMatchOracle) {
  for (double q : {0.5, 0.7, 0.9, 0.99}) {
    const Deformation d(q);
    for (double x : {0.01, 0.5, 2.0, 5.0, 12.0}) {
      const double expected = static_cast<double>(oracle::normalization_series(x, q));
      EXPECT_LT(rel(normalization(x, d), expected), 1e-13) << q << " " << x;
      EXPECT_NEAR(log_normalization_series(x, d), std::log(expected), 1e-13 * std::log(expected) + 1e-15);
    }
  }
}

TEST(Normalization, RejectsNegativeIntensity) {
  EXPECT_THROW(normalization(-1.0, Deformation(0.5)), DomainError);
}

TEST(Normalization, DerivativesMatchOracle) {
  for (double q : {0.6, 0.85}) {
    const Deformation d(q);
    for (int r = 0; r <= 3; ++r) {
      for (double x : {0.0, 0.3, 1.0, 4.0}) {
        const double expected = static_cast<double>(oracle::normalization_series(x, q, r));
        EXPECT_LT(rel(normalization_derivative(x, r, d), expected), 1e-13) << q << r << x;
      }
    }
  }
  const Deformation classical(1.0);
  EXPECT_NEAR(normalization_derivative(1.5, 2, classical), std::exp(1.5), 1e-13);
}

TEST(Overlap, SelfOverlapIsOne) {
  const Deformation d(0.8);
  for (auto z : {std::complex<double>(0.3, 0.1), std::complex<double>(-1.2, 0.9)}) {
    const auto o = overlap(StateLabel(z), StateLabel(z), d);
    EXPECT_NEAR(o.real(), 1.0, 1e-14);
    EXPECT_NEAR(o.imag(), 0.0, 1e-14);
  }
}

TEST(Overlap, MatchesFockInnerProduct) {
  const double q = 0.75;
  const Deformation d(q);
  const oracle::FockSpace s(100, q);
  const std::complex<double> z1(0.8, -0.4), z2(-0.5, 1.1);
  const auto v1 = s.coherent({z1.real(), z1.imag()});
  const auto v2 = s.coherent({z2.real(), z2.imag()});
  const auto expected = v2.dot(v1);
  const auto got = overlap(StateLabel(z1), StateLabel(z2), d);
  EXPECT_NEAR(got.real(), static_cast<double>(expected.real()), 1e-13);
  EXPECT_NEAR(got.imag(), static_cast<double>(expected.imag()), 1e-13);
}

TEST(Overlap, ClassicalIsGaussian) {
  const std::complex<double> z1(0.4, 0.2), z2(1.0, -0.3);
  const double expected = std::exp(-std::norm(z1 - z2));
  EXPECT_NEAR(std::norm(overlap(StateLabel(z1), StateLabel(z2), Deformation(1.0))), expected, 1e-14);
}

TEST(PhotonProbability, SumsToOne) {
  for (double q : {0.5, 0.9, 1.0}) {
    const Deformation d(q);
    double total = 0.0;
    for (int n = 0; n < 400; ++n) total += photon_probability(n, 3.0, d);
    EXPECT_NEAR(total, 1.0, 1e-13) << q;
  }
  EXPECT_NEAR(photon_probability(2, 2.0, Deformation(1.0)), 2.0 * std::exp(-2.0), 1e-15);
  EXPECT_DOUBLE_EQ(photon_probability(0, 0.0, Deformation(0.6)), 1.0);
  EXPECT_DOUBLE_EQ(photon_probability(3, 0.0, Deformation(0.6)), 0.0);
}

TEST(MeanPhotonNumber, KnownValues) {
  EXPECT_LT(rel(mean_photon_number(2.0, Deformation(0.7)), 1.1372089369590820), 1e-14);
  EXPECT_LT(rel(mean_photon_number(1.0, Deformation(0.8)), 0.73630847977701167), 1e-14);
  EXPECT_LT(rel(mean_photon_number(4.0, Deformation(0.9)), 3.0524673306949883), 1e-14);
  EXPECT_NEAR(mean_photon_number(2.5, Deformation(1.0)), 2.5, 1e-15);
  EXPECT_DOUBLE_EQ(mean_photon_number(0.0, Deformation(0.7)), 0.0);
}

TEST(SFactor, MatchesFockMoments) {
  const double q = 0.8;
  const Deformation d(q);
  const oracle::FockSpace s(110, q);
  const double x = 1.7;
  const std::complex<double> z = std::polar(std::sqrt(x), 0.6);
  const auto v = s.coherent({z.real(), z.imag()});
  const oracle::Matrix ad = s.a.adjoint();
  for (int p = 0; p <= 2; ++p) {
    for (int r = 0; r <= 2; ++r) {
      oracle::Matrix op = oracle::Matrix::Identity(s.dim, s.dim);
      for (int k = 0; k < p; ++k) op = op * ad;
      for (int k = 0; k < r; ++k) op = op * s.a;
      const auto moment = oracle::FockSpace::expect(v, op);
      const std::complex<double> prefactor = std::pow(std::conj(z), p) * std::pow(z, r);
      const double expected =
          p + r == 0 ? 1.0 : static_cast<double>((moment / oracle::Complex(prefactor.real(), prefactor.imag())).real());
      EXPECT_NEAR(s_factor({p, r}, x, d), expected, 1e-12) << p << " " << r;
    }
  }
}

TEST(SFactor, SymmetricAndClassical) {
  const Deformation d(0.7);
  EXPECT_DOUBLE_EQ(s_factor({1, 2}, 1.3, d), s_factor({2, 1}, 1.3, d));
  EXPECT_NEAR(s_factor({0, 0}, 1.3, d), 1.0, 1e-14);
  EXPECT_DOUBLE_EQ(s_factor({2, 1}, 1.3, Deformation(1.0)), 1.0);
}

TEST(NumberExpectation, ShiftedQNumberClosedForm) {
  // <[N+1]_q> = q^{-1} (1 + x).
  for (double q : {0.6, 0.9}) {
    const Deformation d(q);
    for (double x : {0.2, 1.0, 6.0}) {
      const double v = number_expectation(x, d, [&](int n) { return log_q_number(n + 1, d); });
      EXPECT_LT(rel(v, (1.0 + x) / q), 1e-14);
    }
  }
}

TEST(StateLabel, CachesIntensity) {
  const StateLabel s({3.0, -4.0});
  EXPECT_DOUBLE_EQ(s.x(), 25.0);
  const auto r = StateLabel::real_from_intensity(2.25);
  EXPECT_DOUBLE_EQ(r.z().real(), 1.5);
  EXPECT_DOUBLE_EQ(r.z().imag(), 0.0);
}

TEST(Overlap, ContinuousInLabel) {
  const Deformation d(0.6);
  const StateLabel z({0.9, 0.3});
  double prev = 2.0;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double dist = 2.0 * (1.0 - overlap(z, StateLabel({0.9 + eps, 0.3 - eps}), d).real());
    EXPECT_LT(dist, prev);
    prev = dist;
  }
  EXPECT_LT(prev, 1e-7);
}
