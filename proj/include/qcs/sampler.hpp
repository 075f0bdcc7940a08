#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcs/deformation.hpp"

namespace qcs {

/// Photon-number distribution p_q(n, x) tabulated for inverse-CDF sampling.
class PhotonDistribution {
 public:
  /// Extends the support until the remaining tail is below tail_tol.
  /// Throws TruncationInsufficient if that needs more than max_support states.
  PhotonDistribution(const Deformation& d, double x, double tail_tol = 1e-12,
                     int max_support = 100000, const SeriesControl& ctrl = {});

  int support() const noexcept { return static_cast<int>(pmf_.size()); }
  const std::vector<double>& pmf() const noexcept { return pmf_; }
  /// Bound on probability mass beyond the support.
  double tail_bound() const noexcept { return tail_bound_; }

  /// Smallest n with cdf(n) > u, for u in [0, 1).
  int quantile(double u) const;

 private:
  std::vector<double> pmf_;
  std::vector<double> cdf_;
  double tail_bound_;
};

struct SampleReport {
  double q;
  double x;
  long long draws;
  std::uint64_t seed;
  double empirical_mean;
  double empirical_Q;
  double analytic_Q;
  /// Delta-method standard error of empirical_Q.
  double std_error;
  double mean_std_error;
  std::string rng;

  /// |empirical_Q - analytic_Q| <= 3 std_error.
  bool consistent() const;
};

/// Draws n ~ p_q(n, x) with a std::mt19937_64 stream seeded by `seed`.
/// Throws DomainError unless draws >= 1000 and x > 0.
SampleReport sample_photon_numbers(const Deformation& d, double x, long long draws,
                                   std::uint64_t seed, const SeriesControl& ctrl = {});

}  // namespace qcs
