#include "qcs/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qcs/detail/log_sum.hpp"
#include "qcs/errors.hpp"
#include "qcs/qcore.hpp"

namespace qcs {

FockVector::FockVector(const Deformation& d, std::vector<std::complex<double>> coeffs, double tail)
    : d_(d), coeffs_(std::move(coeffs)), tail_(tail) {
  if (coeffs_.empty()) throw DomainError("FockVector: trunc must be >= 1");
}

double FockVector::squared_norm() const {
  double acc = 0.0;
  for (const auto& c : coeffs_) acc += std::norm(c);
  return acc;
}

namespace {

// sum_{n>=trunc} p_q(n, x), summed from the first omitted term.
double fock_tail(double x, int trunc, double log_norm, const Deformation& d,
                 const SeriesControl& ctrl) {
  if (x == 0.0) return 0.0;
  const double log_x = std::log(x);
  const auto sum = detail::sum_log_series(
      [&](int n) { return n * log_x - log_q_factorial(n, d) - log_norm; }, trunc, ctrl, 0,
      "fock tail");
  return std::exp(sum.log_value);
}

FockVector build(const StateLabel& z, const Deformation& d, int trunc, const SeriesControl& ctrl) {
  std::vector<std::complex<double>> c(static_cast<std::size_t>(trunc));
  const double x = z.x();
  if (x == 0.0) {
    c[0] = 1.0;
    return FockVector(d, std::move(c), 0.0);
  }
  const double log_norm = log_normalization(x, d, ctrl);
  const double log_r = 0.5 * std::log(x);
  const double phase = std::arg(z.z());
  for (int n = 0; n < trunc; ++n) {
    const double log_mag = n * log_r - 0.5 * (log_q_factorial(n, d) + log_norm);
    c[static_cast<std::size_t>(n)] = std::polar(std::exp(log_mag), n * phase);
  }
  return FockVector(d, std::move(c), fock_tail(x, trunc, log_norm, d, ctrl));
}

}  // namespace

FockVector fock_coefficients(const StateLabel& z, const Deformation& d, int trunc, bool auto_extend,
                             const SeriesControl& ctrl) {
  if (trunc < 1) throw DomainError("fock_coefficients: trunc must be >= 1");
  FockVector v = build(z, d, trunc, ctrl);
  if (!auto_extend) return v;
  while (v.tail() >= kFockTailThreshold) {
    if (trunc >= kFockTruncCap) {
      throw TruncationInsufficient("fock_coefficients: tail " + std::to_string(v.tail()) +
                                   " above threshold at truncation cap");
    }
    trunc = std::min(2 * trunc, kFockTruncCap);
    v = build(z, d, trunc, ctrl);
  }
  return v;
}

FockVector number_state(int n, int trunc, const Deformation& d) {
  if (trunc < 1 || n < 0 || n >= trunc) throw DomainError("number_state: need 0 <= n < trunc");
  std::vector<std::complex<double>> c(static_cast<std::size_t>(trunc));
  c[static_cast<std::size_t>(n)] = 1.0;
  return FockVector(d, std::move(c));
}

FockVector b_apply(const FockVector& v, bool dagger) {
  const int size = v.trunc();
  const auto& d = v.deformation();
  std::vector<std::complex<double>> out(static_cast<std::size_t>(size));
  if (dagger) {
    for (int n = 1; n < size; ++n) {
      out[static_cast<std::size_t>(n)] = std::sqrt(q_number(n, d)) * v[n - 1];
    }
  } else {
    for (int n = 0; n + 1 < size; ++n) {
      out[static_cast<std::size_t>(n)] = std::sqrt(q_number(n + 1, d)) * v[n + 1];
    }
  }
  return FockVector(d, std::move(out));
}

FockVector number_apply(const FockVector& v) {
  std::vector<std::complex<double>> out(v.coeffs().begin(), v.coeffs().end());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] *= static_cast<double>(n);
  return FockVector(v.deformation(), std::move(out));
}

FockVector combine(const FockVector& u, const FockVector& v, std::complex<double> scale) {
  if (u.trunc() != v.trunc() || !(u.deformation() == v.deformation())) {
    throw DomainError("combine: mismatched Fock vectors");
  }
  std::vector<std::complex<double>> out(u.coeffs().begin(), u.coeffs().end());
  for (int n = 0; n < u.trunc(); ++n) out[static_cast<std::size_t>(n)] -= scale * v[n];
  return FockVector(u.deformation(), std::move(out));
}

double eigenstate_residual(const StateLabel& z, const Deformation& d, int trunc,
                           const SeriesControl& ctrl) {
  if (trunc < 3) throw DomainError("eigenstate_residual: trunc must be >= 3");
  const FockVector v = fock_coefficients(z, d, trunc, false, ctrl);
  if (v.tail() >= kFockTailThreshold) {
    throw TruncationInsufficient("eigenstate_residual: tail " + std::to_string(v.tail()) +
                                 " not below threshold at trunc " + std::to_string(trunc));
  }
  const FockVector r = combine(b_apply(v, false), v, z.z());
  double acc = 0.0;
  for (int n = 0; n + 2 < trunc; ++n) acc += std::norm(r[n]);
  return std::sqrt(acc);
}

}  // namespace qcs
