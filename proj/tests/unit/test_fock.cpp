#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "oracle.hpp"
#include "qcs/errors.hpp"
#include "qcs/fock.hpp"
#include "qcs/qcore.hpp"

using namespace qcs;

TEST(FockCoefficients, MatchOracleVector) {
  const double q = 0.8;
  const std::complex<double> z(1.1, -0.6);
  const auto v = fock_coefficients(StateLabel(z), Deformation(q), 60);
  const auto ref = oracle::FockSpace(120, q).coherent({z.real(), z.imag()});
  for (int n = 0; n < 60; ++n) {
    EXPECT_NEAR(v[n].real(), static_cast<double>(ref(n).real()), 1e-15) << n;
    EXPECT_NEAR(v[n].imag(), static_cast<double>(ref(n).imag()), 1e-15) << n;
  }
  EXPECT_NEAR(v.squared_norm() + v.tail(), 1.0, 1e-14);
  EXPECT_LT(v.tail(), 1e-30);
}

TEST(FockCoefficients, AutoExtendGrowsTruncation) {
  const Deformation d(0.99);
  const StateLabel z({3.0, 0.0});
  const auto fixed = fock_coefficients(z, d, 8);
  EXPECT_GT(fixed.tail(), kFockTailThreshold);
  const auto grown = fock_coefficients(z, d, 8, true);
  EXPECT_GT(grown.trunc(), 8);
  EXPECT_LT(grown.tail(), kFockTailThreshold);
}

TEST(FockCoefficients, AutoExtendHitsCap) {
  EXPECT_THROW(fock_coefficients(StateLabel({40.0, 0.0}), Deformation(1.0), 8, true),
               TruncationInsufficient);
}

TEST(Eigenstate, DeformedAnnihilationResidual) {
  for (double q : {0.5, 0.7, 0.9}) {
    for (double x : {0.25, 1.0, 2.0, 4.0}) {
      const StateLabel z(std::polar(std::sqrt(x), 1.3));
      EXPECT_LT(eigenstate_residual(z, Deformation(q), 60), 1e-10) << q << " " << x;
    }
  }
}

TEST(Eigenstate, ThrowsWhenTruncationTooSmall) {
  EXPECT_THROW(eigenstate_residual(StateLabel({2.0, 0.0}), Deformation(0.95), 6),
               TruncationInsufficient);
}

TEST(Ladder, MatchesOracleMatrix) {
  const double q = 0.7;
  const int trunc = 12;
  const Deformation d(q);
  const oracle::FockSpace s(trunc, q);
  for (int n = 0; n < trunc; ++n) {
    const auto v = number_state(n, trunc, d);
    const auto down = b_apply(v, false);
    const auto up = b_apply(v, true);
    for (int m = 0; m < trunc; ++m) {
      EXPECT_NEAR(down[m].real(), static_cast<double>(s.b(m, n).real()), 1e-13);
      EXPECT_NEAR(up[m].real(), static_cast<double>(s.b(n, m).real()), 1e-13);
    }
  }
}

TEST(Ladder, CommutatorSpectrum) {
  const double q = 0.8;
  const int trunc = 40;
  const Deformation d(q);
  for (int n = 0; n < trunc - 1; ++n) {
    const auto v = number_state(n, trunc, d);
    const auto comm = combine(b_apply(b_apply(v, true), false), b_apply(b_apply(v, false), true));
    const double expected = std::pow(q, -n - 1.0);
    EXPECT_NEAR(comm[n].real() / expected, 1.0, 1e-12) << n;
    for (int m = 0; m < trunc; ++m) {
      if (m != n) EXPECT_EQ(comm[m], std::complex<double>(0.0));
    }
  }
}

TEST(Ladder, NumberRaisesByOne) {
  // [N, b^dagger] = b^dagger on any vector whose top entry is empty.
  const Deformation d(0.65);
  const auto v = fock_coefficients(StateLabel({0.7, 0.4}), d, 30);
  const auto nb = number_apply(b_apply(v, true));
  const auto bn = b_apply(number_apply(v), true);
  const auto lhs = combine(nb, bn);
  const auto rhs = b_apply(v, true);
  for (int m = 0; m < 30; ++m) {
    EXPECT_NEAR(std::abs(lhs[m] - rhs[m]), 0.0, 1e-15) << m;
  }
}

TEST(Ladder, TopOfBasisIsDropped) {
  const Deformation d(0.8);
  const auto top = number_state(4, 5, d);
  const auto up = b_apply(top, true);
  EXPECT_DOUBLE_EQ(up.squared_norm(), 0.0);
  EXPECT_THROW(number_state(5, 5, d), DomainError);
}

TEST(Combine, SizeMismatchThrows) {
  const Deformation d(0.8);
  EXPECT_THROW(combine(number_state(0, 4, d), number_state(0, 5, d)), DomainError);
}
