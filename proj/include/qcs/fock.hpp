#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qcs/deformation.hpp"
#include "qcs/states.hpp"

namespace qcs {

/// Coefficients c_0..c_{trunc-1} of a state on a truncated Fock basis.
class FockVector {
 public:
  FockVector(const Deformation& d, std::vector<std::complex<double>> coeffs, double tail = 0.0);

  int trunc() const noexcept { return static_cast<int>(coeffs_.size()); }
  std::span<const std::complex<double>> coeffs() const noexcept { return coeffs_; }
  std::complex<double> operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  const Deformation& deformation() const noexcept { return d_; }

  /// Probability weight lying beyond the truncation, when known.
  double tail() const noexcept { return tail_; }
  double squared_norm() const;

 private:
  Deformation d_;
  std::vector<std::complex<double>> coeffs_;
  double tail_;
};

/// Tail threshold used by automatic truncation extension.
inline constexpr double kFockTailThreshold = 1e-12;
inline constexpr int kFockDefaultTrunc = 60;
inline constexpr int kFockTruncCap = 1024;

/// Truncated expansion of |z>_q: c_n = N_q^{-1/2} z^n / sqrt([n]_q!).
///
/// Magnitudes are formed in log domain and the phase is exactly n arg z.
/// The tail sum_{n>=trunc} p_q(n, x) is summed explicitly. With
/// `auto_extend`, trunc doubles until the tail is below kFockTailThreshold,
/// throwing TruncationInsufficient past kFockTruncCap.
FockVector fock_coefficients(const StateLabel& z, const Deformation& d,
                             int trunc = kFockDefaultTrunc, bool auto_extend = false,
                             const SeriesControl& ctrl = {});

/// Number state |n> on a basis of size trunc.
FockVector number_state(int n, int trunc, const Deformation& d);

/// Deformed ladder action: (b v)_n = sqrt([n+1]_q) c_{n+1} and
/// (b^dagger v)_n = sqrt([n]_q) c_{n-1}. b^dagger drops the amplitude pushed
/// past the top basis state; b sees c_trunc as zero.
FockVector b_apply(const FockVector& v, bool dagger);

/// (N v)_n = n c_n.
FockVector number_apply(const FockVector& v);

/// u - scale * v, entrywise. Sizes and deformations must match.
FockVector combine(const FockVector& u, const FockVector& v, std::complex<double> scale = 1.0);

/// || b|z>_q - z|z>_q || over entries 0..trunc-3 (top two rows excluded).
///
/// Throws TruncationInsufficient unless the state's tail is below
/// kFockTailThreshold at this trunc.
double eigenstate_residual(const StateLabel& z, const Deformation& d, int trunc = kFockDefaultTrunc,
                           const SeriesControl& ctrl = {});

}  // namespace qcs
