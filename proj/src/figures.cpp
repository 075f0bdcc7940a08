#include "qcs/figures.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "qcs/errors.hpp"
#include "qcs/moments.hpp"
#include "qcs/observables.hpp"
#include "qcs/qcore.hpp"
#include "qcs/states.hpp"

namespace qcs {

namespace {

const std::vector<double> kCaptionQs = {1.0, 0.9, 0.8, 0.7};

using Curve = std::function<double(double, const Deformation&, const SeriesControl&)>;

struct CurveFigure {
  const char* symbol;
  Curve curve;
};

CurveFigure curve_for(int id) {
  switch (id) {
    case 2:
      return {"N", [](double x, const Deformation& d, const SeriesControl& c) {
                return normalization(x, d, c);
              }};
    case 3:
      return {"Wtilde", [](double x, const Deformation& d, const SeriesControl& c) {
                return weight_tilde(x, d, c);
              }};
    case 4:
      return {"W", [](double x, const Deformation& d, const SeriesControl& c) {
                return weight(x, d, c);
              }};
    case 5:
      return {"omega", [](double x, const Deformation& d, const SeriesControl& c) {
                return metric_factor(x, d, c);
              }};
    case 6:
      return {"Q", [](double x, const Deformation& d, const SeriesControl& c) {
                return mandel_q(x, d, c);
              }};
    case 7:
      return {"R", [](double x, const Deformation& d, const SeriesControl& c) {
                return squeezing_ratio(x, d, c);
              }};
    case 9:
      return {"R_b", [](double x, const Deformation& d, const SeriesControl& c) {
                return deformed_squeezing_ratio(x, d, c);
              }};
    default:
      throw DomainError("no single-curve definition for figure " + std::to_string(id));
  }
}

std::string column(const char* symbol, double q) {
  return std::string(symbol) + "_{" + format_q(q) + "}";
}

}  // namespace

FigureSpec FigureSpec::defaults(int figure_id) {
  switch (figure_id) {
    case 1:
      return {1, {0.98, 0.96, 0.94}, {0.0, 30.0, 31}, "d_q(n) = [n]_q!/n! over integer n"};
    case 2:
      return {2, kCaptionQs, {0.0, 5.0, 201}, "normalization N_q(x)"};
    case 3:
      return {3, kCaptionQs, {0.0, 5.0, 201}, "weight function Wtilde_q(x)"};
    case 4:
      return {4, kCaptionQs, {0.0, 5.0, 201}, "weight function W_q(x)"};
    case 5:
      return {5, kCaptionQs, {0.0, 10.0, 201}, "metric factor omega_q(x)"};
    case 6:
      return {6, kCaptionQs, {0.0, 10.0, 201}, "Mandel parameter Q_q(x)"};
    case 7:
      return {7, kCaptionQs, {0.0, 5.0, 201}, "variance ratio R_q(x), real z = sqrt(x)"};
    case 8:
      return {8, {0.7}, {0.0, 5.0, 201}, "signal-to-noise ratios, real z = sqrt(x)"};
    case 9:
      return {9, kCaptionQs, {0.0, 5.0, 201}, "deformed variance ratio R_bq(x)"};
    default:
      throw DomainError("figure id must be in 1..9, got " + std::to_string(figure_id));
  }
}

FigureTable build_figure(const FigureSpec& spec, const SeriesControl& ctrl, Execution exec) {
  if (spec.q_list.empty()) throw DomainError("build_figure: q_list is empty");
  std::vector<Deformation> qs;
  for (double q : spec.q_list) qs.emplace_back(q);

  FigureTable table;
  if (spec.figure_id == 1) {
    const int lo = static_cast<int>(std::lround(spec.x_range.lo));
    const int hi = static_cast<int>(std::lround(spec.x_range.hi));
    if (lo < 0 || hi < lo) throw DomainError("figure 1: need 0 <= n_lo <= n_hi");
    table.integer_abscissa = true;
    table.header.push_back("n");
    for (const auto& d : qs) table.header.push_back(column("d", d.q()));
    table.rows = map_indices(
        static_cast<std::size_t>(hi - lo + 1),
        [&](std::size_t i) {
          const int n = lo + static_cast<int>(i);
          std::vector<double> row{static_cast<double>(n)};
          for (const auto& d : qs) row.push_back(d_ratio(n, d));
          return row;
        },
        exec);
    return table;
  }

  const auto xs = linspace(spec.x_range.lo, spec.x_range.hi, spec.x_range.points);
  table.header.push_back("x");
  if (spec.figure_id == 8) {
    const Deformation& d = qs.front();
    const std::string q = format_q(d.q());
    table.header.insert(table.header.end(),
                        {"sigma_{" + q + "}", "4<N>_{" + q + "}", "4<N>(<N>+1)_{" + q + "}",
                         "sigma_b_{" + q + "}"});
    table.rows = evaluate_grid(
        xs,
        [&](double x) {
          const auto s = snr(x, d, ctrl);
          return std::vector<double>{x, s.sigma, s.lower, s.upper, deformed_snr(x, d, ctrl)};
        },
        exec);
    return table;
  }

  const auto fig = curve_for(spec.figure_id);
  for (const auto& d : qs) table.header.push_back(column(fig.symbol, d.q()));
  table.rows = evaluate_grid(
      xs,
      [&](double x) {
        std::vector<double> row{x};
        for (const auto& d : qs) row.push_back(fig.curve(x, d, ctrl));
        return row;
      },
      exec);
  return table;
}

std::string format_csv_value(double v) {
  char buf[64];
  const int len = std::snprintf(buf, sizeof buf, "%.16e", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

std::string format_q(double q) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, q);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const FigureTable& table) {
  for (std::size_t j = 0; j < table.header.size(); ++j) {
    if (j != 0) os << ',';
    os << table.header[j];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j != 0) os << ',';
      if (j == 0 && table.integer_abscissa) {
        os << static_cast<long long>(row[0]);
      } else {
        os << format_csv_value(row[j]);
      }
    }
    os << '\n';
  }
}

}  // namespace qcs
