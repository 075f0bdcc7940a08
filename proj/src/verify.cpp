#include "qcs/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "json.hpp"
#include "qcs/errors.hpp"
#include "qcs/figures.hpp"
#include "qcs/fock.hpp"
#include "qcs/moments.hpp"
#include "qcs/observables.hpp"
#include "qcs/qcore.hpp"
#include "qcs/states.hpp"

namespace qcs {

namespace {

constexpr std::array<std::string_view, 6> kSuites = {"moments", "limits", "observables",
                                                     "fock",    "carleman", "all"};

std::vector<double> pick(std::span<const double> given, std::vector<double> fallback) {
  if (given.empty()) return fallback;
  return {given.begin(), given.end()};
}

std::string label(std::string_view what, double q) {
  return std::string(what) + " q=" + format_q(q);
}

double worst(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

// Worst value of fn over xs; "below threshold" checks.
template <class Fn>
CheckResult max_check(std::string name, std::span<const double> xs, double threshold, Fn&& fn,
                      Execution exec) {
  const double w = worst(evaluate_grid(xs, fn, exec));
  return {std::move(name), w < threshold, w, threshold};
}

// Strictly interior grid of `points` values in (0, hi].
std::vector<double> open_grid(double hi, int points) {
  std::vector<double> xs;
  for (int i = 1; i <= points; ++i) xs.push_back(hi * i / points);
  return xs;
}

void moments_suite(std::vector<CheckResult>& out, std::span<const double> q_list, double tol,
                   Execution exec) {
  for (double q : pick(q_list, {0.7, 0.8, 0.9})) {
    const Deformation d(q);
    const auto reports =
        map_indices(11, [&](std::size_t n) { return moment_integral(static_cast<int>(n), d); }, exec);
    for (const auto& r : reports) {
      out.push_back({label("moment n=" + std::to_string(r.n), q), r.rel_error < tol, r.rel_error,
                     tol});
    }
  }
}

void limits_suite(std::vector<CheckResult>& out, Execution exec) {
  const Deformation d(0.999);
  const auto xs = linspace(0.0, 5.0, 201);
  constexpr double kBound = 1e-2;
  out.push_back(max_check("limit N_q vs exp(x) q=0.999", xs, kBound, [&](double x) {
    return std::abs(std::expm1(log_normalization(x, d) - x));
  }, exec));
  out.push_back(max_check("limit Wtilde_q vs exp(-x) q=0.999", xs, kBound, [&](double x) {
    return std::abs(std::expm1(log_weight_tilde(x, d) + x));
  }, exec));
  out.push_back(max_check("limit W_q vs 1/pi q=0.999", xs, kBound, [&](double x) {
    return std::abs(weight(x, d) * std::numbers::pi - 1.0);
  }, exec));
  const Deformation classical = Deformation::classical_limit();
  out.push_back(max_check("limit p_q(n,x) vs Poisson q=0.999", xs, kBound, [&](double x) {
    double dev = 0.0;
    for (int n = 0; n <= 40; ++n) {
      dev = std::max(dev, std::abs(photon_probability(n, x, d) - photon_probability(n, x, classical)));
    }
    return dev;
  }, exec));
}

void observables_suite(std::vector<CheckResult>& out, std::span<const double> q_list,
                       Execution exec) {
  const auto wide = open_grid(10.0, 201);
  const auto narrow = open_grid(5.0, 100);
  for (double q : pick(q_list, {0.5, 0.7, 0.8, 0.9})) {
    const Deformation d(q);
    if (d.classical()) continue;
    out.push_back(max_check(label("Mandel Q < 0 on (0,10]", q), wide, 0.0,
                            [&](double x) { return mandel_q(x, d); }, exec));
    out.push_back(max_check(label("metric omega - 1 < 0 on (0,10]", q), wide, 0.0,
                            [&](double x) { return metric_factor(x, d) - 1.0; }, exec));
    {
      const double err = std::abs(metric_factor(0.0, d) - q);
      out.push_back({label("metric omega(0) = q", q), err < 1e-8, err, 1e-8});
    }
    out.push_back(max_check(label("uncertainty 1/4 - varX varP", q), narrow, 1e-12, [&](double x) {
      double w = -1.0;
      for (double phase : {0.0, 0.4, 1.1, 2.0}) {
        const auto v = quadrature_variances(StateLabel(std::polar(std::sqrt(x), phase)), d);
        w = std::max(w, 0.25 - v.var_x * v.var_p);
      }
      return w;
    }, exec));
    out.push_back(max_check(label("squeezing R - 1 < 0 on (0,5]", q), narrow, 0.0,
                            [&](double x) { return squeezing_ratio(x, d) - 1.0; }, exec));
    out.push_back(max_check(label("snr 4<N> - sigma <= 0", q), narrow, 1e-10, [&](double x) {
      const auto s = snr(x, d);
      return s.lower - s.sigma;
    }, exec));
    out.push_back(max_check(label("snr sigma - 4<N>(<N>+1) <= 0", q), narrow, 1e-10, [&](double x) {
      const auto s = snr(x, d);
      return s.sigma - s.upper;
    }, exec));
    out.push_back(max_check(label("deformed snr sigma_b - 4<N> <= 0", q), narrow, 1e-10,
                            [&](double x) { return deformed_snr(x, d) - 4.0 * mean_photon_number(x, d); },
                            exec));
    out.push_back(max_check(label("deformed R_b > 1 on (0,5]", q), narrow, 0.0,
                            [&](double x) { return 1.0 - deformed_squeezing_ratio(x, d); }, exec));
    out.push_back(max_check(label("intelligent-state variance, two routes", q), narrow, 1e-10,
                            [&](double x) {
                              const double a = deformed_variance(x, d);
                              return std::abs(a - deformed_variance_split(x, d)) / a;
                            },
                            exec));
  }
}

void fock_suite(std::vector<CheckResult>& out, std::span<const double> q_list, Execution exec) {
  const std::vector<double> intensities = {0.25, 1.0, 2.0, 4.0};
  for (double q : pick(q_list, {0.7, 0.8, 0.9})) {
    const Deformation d(q);
    out.push_back(max_check(label("eigenstate residual trunc=60", q), intensities, 1e-10,
                            [&](double x) {
                              return eigenstate_residual(StateLabel(std::polar(std::sqrt(x), 0.7)),
                                                         d, kFockDefaultTrunc);
                            },
                            exec));
    const int trunc = kFockDefaultTrunc;
    const auto ns = map_indices_serial(static_cast<std::size_t>(trunc - 2),
                                       [](std::size_t n) { return static_cast<double>(n); });
    out.push_back(max_check(label("commutator [b,b+]|n> = q^{-n-1}|n>", q), ns, 1e-10,
                            [&](double nd) {
                              const int n = static_cast<int>(nd);
                              const auto v = number_state(n, trunc, d);
                              const auto up = b_apply(b_apply(v, true), false);
                              const auto down = b_apply(b_apply(v, false), true);
                              const double expected = std::pow(q, -n - 1.0);
                              return std::abs((up[n] - down[n]).real() - expected) / expected;
                            },
                            exec));
    out.push_back(max_check(label("quommutator bb+ - q^-1 b+b = q^-1", q), ns, 1e-13,
                            [&](double nd) {
                              const int n = static_cast<int>(nd);
                              const auto v = number_state(n, trunc, d);
                              const auto up = b_apply(b_apply(v, true), false);
                              const auto down = b_apply(b_apply(v, false), true);
                              // Both terms grow like q^{-n}; measure the residual
                              // against them rather than against the O(1) difference.
                              const double value = (up[n] - down[n] / q).real();
                              return std::abs(value - 1.0 / q) / std::abs(up[n]);
                            },
                            exec));
  }
}

void carleman_suite(std::vector<CheckResult>& out, std::span<const double> q_list) {
  for (double q : pick(q_list, {0.7, 0.8, 0.9})) {
    const Deformation d(q);
    if (d.classical()) continue;
    const auto diag = carleman_diagnostic(d, 400);
    const double threshold = diag.convergence_threshold ? *diag.convergence_threshold : 1e9;
    const double bound = q <= 0.7 ? 50.0 : 400.0;
    out.push_back({label("carleman threshold (ln a_n/ln n < -1 beyond)", q),
                   diag.convergence_threshold.has_value() && threshold <= bound, threshold, bound});
  }
  const auto classical = carleman_diagnostic(Deformation::classical_limit(), 200);
  double worst_ratio = 0.0;
  for (std::size_t i = 1; i < classical.log_ratio.size(); ++i) {
    worst_ratio = std::min(worst_ratio, classical.log_ratio[i]);
  }
  out.push_back({"carleman classical ratio > -1", worst_ratio > -1.0, worst_ratio, -1.0});
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::span<const std::string_view> suite_names() { return kSuites; }

VerifyReport run_suite(std::string_view suite, std::span<const double> q_list, double tol,
                       Execution exec) {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
    throw DomainError("unknown verify suite '" + std::string(suite) + "'");
  }
  VerifyReport report{std::string(suite), {}};
  const bool all = suite == "all";
  if (all || suite == "moments") moments_suite(report.checks, q_list, tol, exec);
  if (all || suite == "limits") limits_suite(report.checks, exec);
  if (all || suite == "observables") observables_suite(report.checks, q_list, exec);
  if (all || suite == "fock") fock_suite(report.checks, q_list, exec);
  if (all || suite == "carleman") carleman_suite(report.checks, q_list);
  return report;
}

void write_text(std::ostream& os, const VerifyReport& report) {
  char buf[64];
  for (const auto& c : report.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    std::snprintf(buf, sizeof buf, " achieved=%.6e", c.achieved);
    os << buf;
    std::snprintf(buf, sizeof buf, " threshold=%.6e", c.threshold);
    os << buf << '\n';
  }
  const auto passed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const auto& c) { return c.pass; });
  os << "suite " << report.suite << ": " << passed << "/" << report.checks.size() << " passed\n";
}

void write_json(std::ostream& os, const VerifyReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["pass"] = report.all_pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"pass", c.pass}, {"achieved", c.achieved}, {"threshold", c.threshold}});
  }
  os << j.dump(2) << '\n';
}

}  // namespace qcs
