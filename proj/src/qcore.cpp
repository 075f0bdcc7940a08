#include "qcs/qcore.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qcs/detail/log_sum.hpp"
#include "qcs/errors.hpp"

namespace qcs {

Deformation::Deformation(double q) : q_(q), log_q_(0.0), one_minus_q_(0.0), classical_(false) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw InvalidDeformation("deformation parameter must satisfy 0 < q <= 1, got " +
                             std::to_string(q));
  }
  classical_ = (q == 1.0);
  log_q_ = std::log(q);
  one_minus_q_ = 1.0 - q;
}

SeriesControl::SeriesControl(double rel_tol_, int max_terms_)
    : rel_tol(rel_tol_), max_terms(max_terms_) {
  if (!(rel_tol > 0.0)) throw DomainError("SeriesControl: rel_tol must be positive");
  if (max_terms < 1) throw DomainError("SeriesControl: max_terms must be >= 1");
}

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": n must be >= 0");
}

// ln {k}_q for k >= 1.
double log_maths_number(int k, const Deformation& d) {
  return std::log(-std::expm1(k * d.log_q())) - std::log(d.one_minus_q());
}

// Per-thread memo of ln([n]_q!) keyed by q. Small and append-only.
class FactorialMemo {
 public:
  double get(int n, const Deformation& d) {
    auto& values = slot(d.q());
    while (static_cast<int>(values.size()) <= n) {
      const int k = static_cast<int>(values.size());
      values.push_back(values.back() + log_q_number(k, d));
    }
    return values[static_cast<std::size_t>(n)];
  }

 private:
  static constexpr std::size_t kSlots = 8;

  std::vector<double>& slot(double q) {
    for (auto& [key, values] : slots_) {
      if (key == q) return values;
    }
    if (slots_.size() == kSlots) slots_.erase(slots_.begin());
    slots_.emplace_back(q, std::vector<double>{0.0});
    return slots_.back().second;
  }

  std::vector<std::pair<double, std::vector<double>>> slots_;
};

}  // namespace

double log_factorial(int n) {
  require_nonnegative(n, "log_factorial");
  static constexpr int kTable = 4096;
  static const std::vector<double> table = [] {
    std::vector<double> t(kTable, 0.0);
    long double acc = 0.0L;
    for (int k = 1; k < kTable; ++k) {
      acc += std::log(static_cast<long double>(k));
      t[static_cast<std::size_t>(k)] = static_cast<double>(acc);
    }
    return t;
  }();
  if (n < kTable) return table[static_cast<std::size_t>(n)];
  // Stirling with three correction terms; relative error far below 1e-16 here.
  const double m = n + 1.0;
  return (m - 0.5) * std::log(m) - m + 0.5 * std::log(2.0 * std::numbers::pi) + 1.0 / (12.0 * m) -
         1.0 / (360.0 * m * m * m) + 1.0 / (1260.0 * m * m * m * m * m);
}

double q_number(int n, const Deformation& d) {
  require_nonnegative(n, "q_number");
  if (d.classical()) return n;
  if (n == 0) return 0.0;
  return std::exp(-n * d.log_q()) * (-std::expm1(n * d.log_q())) / d.one_minus_q();
}

double q_number_maths(int n, const Deformation& d) {
  require_nonnegative(n, "q_number_maths");
  if (d.classical()) return n;
  return -std::expm1(n * d.log_q()) / d.one_minus_q();
}

double log_q_number(int n, const Deformation& d) {
  require_nonnegative(n, "log_q_number");
  if (n == 0) return detail::kNegInf;
  if (d.classical()) return std::log(static_cast<double>(n));
  return -n * d.log_q() + log_maths_number(n, d);
}

double log_q_factorial(int n, const Deformation& d) {
  require_nonnegative(n, "log_q_factorial");
  if (d.classical()) return log_factorial(n);
  thread_local FactorialMemo memo;
  return memo.get(n, d);
}

double log_q_gamma(int m, const Deformation& d) {
  if (m < 1) throw DomainError("log_q_gamma: argument must be >= 1");
  if (d.classical()) return log_factorial(m - 1);
  double acc = 0.0;
  for (int k = 1; k < m; ++k) acc += log_maths_number(k, d);
  return acc;
}

double d_ratio(int n, const Deformation& d) {
  require_nonnegative(n, "d_ratio");
  if (d.classical() || n == 0) return 1.0;
  return std::exp(log_q_factorial(n, d) - log_factorial(n));
}

LogFactorialTable::LogFactorialTable(const Deformation& d, int n_max) : d_(d) {
  require_nonnegative(n_max, "LogFactorialTable");
  log_values_.reserve(static_cast<std::size_t>(n_max) + 1);
  log_values_.push_back(0.0);
  for (int k = 1; k <= n_max; ++k) {
    double log_k;
    if (d.classical()) {
      log_k = std::log(static_cast<double>(k));
    } else if (-k * d.log_q() < 700.0) {
      // Literal (1 - q^-k)/(q - 1) while q^-k is representable.
      log_k = std::log((1.0 - std::pow(d.q(), -k)) / (d.q() - 1.0));
    } else {
      log_k = log_q_number(k, d);
    }
    log_values_.push_back(log_values_.back() + log_k);
  }
}

double LogFactorialTable::via_gamma(int n) const {
  require_nonnegative(n, "LogFactorialTable::via_gamma");
  if (d_.classical()) return log_factorial(n);
  return -0.5 * n * (n + 1.0) * d_.log_q() + log_q_gamma(n + 1, d_);
}

namespace {

constexpr double kTailSwitch = 0.5;

// sum_m (-1)^{m+1} w^m / (m (1 - q^m)) for |w| < kTailSwitch.
template <class T>
T tail_log(T w, const Deformation& d, const SeriesControl& ctrl, int budget) {
  T sum{};
  T power = w;
  for (int m = 1; m <= budget; ++m) {
    const double denom = m * -std::expm1(m * d.log_q());
    const T term = (m % 2 == 1 ? 1.0 : -1.0) * power / denom;
    sum += term;
    if (std::abs(term) < ctrl.rel_tol) return sum;
    power *= w;
  }
  throw NonConvergence("jackson_E: tail series exceeded term cap");
}

template <class T, class LogFactor>
std::pair<T, int> log_product(T w, const Deformation& d, const SeriesControl& ctrl,
                              LogFactor&& log_factor) {
  if (d.classical()) {
    throw InvalidDeformation("jackson_E: classical branch must be handled by the caller");
  }
  T acc{};
  int k = 0;
  double qk = 1.0;
  while (std::abs(qk * w) >= kTailSwitch) {
    if (k >= ctrl.max_terms) {
      throw NonConvergence("jackson_E: more than " + std::to_string(ctrl.max_terms) +
                           " factors required");
    }
    acc += log_factor(qk * w);
    ++k;
    qk = std::pow(d.q(), k);
  }
  acc += tail_log(qk * w, d, ctrl, ctrl.max_terms - k);
  return {acc, k};
}

}  // namespace

JacksonValue jackson_E(std::complex<double> w, const Deformation& d, const SeriesControl& ctrl) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw DomainError("jackson_E: argument must be finite");
  }
  bool zero = false;
  auto [log_value, factors] = log_product(w, d, ctrl, [&](std::complex<double> t) {
    const std::complex<double> f = 1.0 + t;
    if (f == 0.0) {
      zero = true;
      return std::complex<double>{};
    }
    return std::log(f);
  });
  if (zero) return {0.0, factors, true};
  return {std::exp(log_value), factors, false};
}

std::complex<double> log_jackson_E(std::complex<double> w, const Deformation& d,
                                   const SeriesControl& ctrl) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw DomainError("log_jackson_E: argument must be finite");
  }
  return log_product(w, d, ctrl, [](std::complex<double> t) {
           const std::complex<double> f = 1.0 + t;
           if (f == 0.0) throw DomainError("log_jackson_E: vanishing factor");
           return std::log(f);
         }).first;
}

double log_jackson_E(double w, const Deformation& d, const SeriesControl& ctrl) {
  if (!(w > -1.0) || !std::isfinite(w)) {
    throw DomainError("log_jackson_E: real argument must be finite and > -1");
  }
  return log_product(w, d, ctrl, [](double t) { return std::log1p(t); }).first;
}

}  // namespace qcs
