#include "qcs/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcs/errors.hpp"

namespace qcs {

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1) throw DomainError("linspace: points must be >= 1");
  if (!(hi >= lo)) throw DomainError("linspace: hi must be >= lo");
  if (points == 1) return {lo};
  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  }
  xs.back() = hi;
  return xs;
}

int sweep_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qcs
