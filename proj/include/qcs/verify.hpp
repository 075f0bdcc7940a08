#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcs/sweep.hpp"

namespace qcs {

struct CheckResult {
  std::string name;
  bool pass;
  /// Worst value of the checked quantity (error, margin, ...).
  double achieved;
  double threshold;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// Suite names accepted by run_suite.
std::span<const std::string_view> suite_names();

/// Runs "moments", "limits", "observables", "fock", "carleman" or "all".
///
/// An empty q_list selects each suite's default deformations. `tol` is the
/// moment relative-error threshold (default 1e-6); other checks use fixed
/// thresholds. Throws DomainError on an unknown suite name.
VerifyReport run_suite(std::string_view suite, std::span<const double> q_list = {},
                       double tol = 1e-6, Execution exec = Execution::parallel);

/// One "PASS|FAIL name achieved=... threshold=..." line per check.
void write_text(std::ostream& os, const VerifyReport& report);

/// {"suite":..., "pass":..., "checks":[{...}]}
void write_json(std::ostream& os, const VerifyReport& report);

}  // namespace qcs
