#pragma once

#include <string>
#include <vector>

#include "chromhom/homology.hpp"
#include "chromhom/star_formulas.hpp"

namespace chromhom {

/// Process exit codes shared by the CLI and the verification harness.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInternal = 2,
  kExitConjectureViolation = 3,
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Finding {
  int n;
  ConjectureViolation violation;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  /// Conjecture findings; never counted as failed checks.
  std::vector<Finding> findings;

  bool checks_passed() const;
  /// kExitInternal if a check failed, else kExitConjectureViolation if there
  /// are findings, else kExitOk.
  int exit_code() const;
  void append(VerifyReport other);
};

/// Closed-form prediction against the reference table, n = 4..7.
VerifyReport verify_table1();

/// Oracle H_{1,0}(star(n)) against the reference table for n = 4..max_n,
/// including zero at every shape absent from the table.
VerifyReport verify_table1_oracle(int max_n, const HomologyOptions& options);

/// Closed forms against each other (hook and two-column identities up to n = 30) and
/// against the oracle on every l 2^k 1^m shape for n = 4..max_n, plus the
/// dimension identity for the prediction.
VerifyReport verify_cross(int max_n, const HomologyOptions& options);

/// check_conjecture for n = 4..max_n.
VerifyReport verify_conjecture(int max_n, const HomologyOptions& options);

}  // namespace chromhom
