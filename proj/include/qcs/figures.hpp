#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcs/deformation.hpp"
#include "qcs/sweep.hpp"

namespace qcs {

struct XRange {
  double lo;
  double hi;
  int points;
};

/// What to tabulate for one figure.
///
/// Defaults: figure 1 plots d_q(n) for
/// q = 0.98, 0.96, 0.94 over integer n; figures 2-7 and 9 use q = 1, 0.9,
/// 0.8, 0.7; figure 8 uses q = 0.7 with four series. Figures 7 and 8 are
/// evaluated at real z = sqrt(x).
struct FigureSpec {
  int figure_id;
  std::vector<double> q_list;
  XRange x_range;
  std::string notes;

  /// Throws DomainError unless 1 <= figure_id <= 9.
  static FigureSpec defaults(int figure_id);
};

/// Column-major-by-series table; column 0 is the abscissa.
struct FigureTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  bool integer_abscissa = false;
};

FigureTable build_figure(const FigureSpec& spec, const SeriesControl& ctrl = {},
                         Execution exec = Execution::parallel);

/// Fixed 17-significant-digit scientific notation ("%.16e").
std::string format_csv_value(double v);

/// Shortest round-trip text for a q value, used in column names.
std::string format_q(double q);

/// Comma-separated, LF line endings, header row first.
void write_csv(std::ostream& os, const FigureTable& table);

}  // namespace qcs
