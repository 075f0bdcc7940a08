#include "qcs/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qcs/errors.hpp"
#include "qcs/observables.hpp"
#include "qcs/qcore.hpp"
#include "qcs/states.hpp"

namespace qcs {

PhotonDistribution::PhotonDistribution(const Deformation& d, double x, double tail_tol,
                                       int max_support, const SeriesControl& ctrl) {
  if (!(x >= 0.0)) throw DomainError("PhotonDistribution: x must be >= 0");
  if (x == 0.0) {
    pmf_ = {1.0};
    cdf_ = {1.0};
    tail_bound_ = 0.0;
    return;
  }
  const double log_norm = log_normalization(x, d, ctrl);
  const double log_x = std::log(x);
  double total = 0.0;
  int n = 0;
  while (true) {
    if (n >= max_support) {
      throw TruncationInsufficient("PhotonDistribution: tail above tolerance at support cap");
    }
    const double p = std::exp(n * log_x - log_q_factorial(n, d) - log_norm);
    pmf_.push_back(p);
    total += p;
    ++n;
    // Past the mode the ratio p_{n+1}/p_n = x/[n+1]_q keeps shrinking, so
    // the tail is bounded by a geometric series with that ratio.
    const double ratio = std::exp(log_x - log_q_number(n, d));
    if (ratio < 1.0) {
      const double bound = p * ratio / (1.0 - ratio);
      if (bound < tail_tol) {
        tail_bound_ = bound;
        break;
      }
    }
  }
  cdf_.resize(pmf_.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < pmf_.size(); ++k) {
    acc += pmf_[k];
    cdf_[k] = acc / total;
  }
  cdf_.back() = 1.0;
}

int PhotonDistribution::quantile(double u) const {
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return static_cast<int>(std::min<std::ptrdiff_t>(it - cdf_.begin(),
                                                   static_cast<std::ptrdiff_t>(cdf_.size()) - 1));
}

bool SampleReport::consistent() const {
  return std::abs(empirical_Q - analytic_Q) <= 3.0 * std_error;
}

SampleReport sample_photon_numbers(const Deformation& d, double x, long long draws,
                                   std::uint64_t seed, const SeriesControl& ctrl) {
  if (draws < 1000) throw DomainError("sample_photon_numbers: draws must be >= 1000");
  if (!(x > 0.0)) throw DomainError("sample_photon_numbers: x must be > 0");
  const PhotonDistribution dist(d, x, 1e-12, 100000, ctrl);
  std::mt19937_64 rng(seed);
  // Raw moments of n, accumulated in long double.
  long double m1 = 0, m2 = 0, m3 = 0, m4 = 0;
  for (long long i = 0; i < draws; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const long double n = dist.quantile(u);
    const long double n2 = n * n;
    m1 += n;
    m2 += n2;
    m3 += n2 * n;
    m4 += n2 * n2;
  }
  const long double count = static_cast<long double>(draws);
  m1 /= count;
  m2 /= count;
  m3 /= count;
  m4 /= count;
  const long double var_n = m2 - m1 * m1;
  const long double cov = m3 - m1 * m2;
  const long double var_n2 = m4 - m2 * m2;
  // Q = m2/m1 - m1 - 1; gradient with respect to (m1, m2).
  const long double g1 = -m2 / (m1 * m1) - 1.0L;
  const long double g2 = 1.0L / m1;
  const long double var_q = (g1 * g1 * var_n + 2.0L * g1 * g2 * cov + g2 * g2 * var_n2) / count;

  return SampleReport{
      .q = d.q(),
      .x = x,
      .draws = draws,
      .seed = seed,
      .empirical_mean = static_cast<double>(m1),
      .empirical_Q = static_cast<double>(m2 / m1 - m1 - 1.0L),
      .analytic_Q = mandel_q(x, d, ctrl),
      .std_error = static_cast<double>(std::sqrt(std::max(var_q, 0.0L))),
      .mean_std_error = static_cast<double>(std::sqrt(var_n / count)),
      .rng = "mt19937_64",
  };
}

}  // namespace qcs
