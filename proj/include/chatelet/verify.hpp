#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chatelet/chow.hpp"

namespace chatelet {

struct MatrixEntry {
  std::string field;
  std::string d, e1, e2;
  std::optional<std::string> expected_case;
  std::optional<std::string> expected_group;
};

struct CheckResult {
  std::string name;
  long passed = 0;
  long failed = 0;
  double elapsed_ms = 0.0;
  std::vector<std::string> failures;  // one line per failing unit

  bool ok() const { return failed == 0; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  long total_passed = 0;
  long total_failed = 0;

  bool ok() const { return total_failed == 0; }
  const CheckResult* find(const std::string& name) const;
};

// Instances exercised by `verify` when no matrix is supplied: one instance
// per case tag over Q_p for p in {3,5,7,13}, plus extension-field extras.
std::vector<MatrixEntry> default_matrix();

// Tag x p matrix only (no extension extras): the classification grid used by
// the depth-stability and invariant checks.
std::vector<MatrixEntry> classification_grid();

// Full verification pass: per-instance closed-form vs brute-force agreement,
// theta-map invariants on the enumerated streams, residue-level sweeps up to
// qmax, and the base-change behavior matrix.
VerifyReport verify_suite(const std::vector<MatrixEntry>& matrix, long qmax,
                          std::optional<long> depth_override = std::nullopt);

// Individual passes (exposed for the acceptance runner).
CheckResult check_classification_matrix(const std::vector<MatrixEntry>& matrix,
                                        std::optional<long> depth_override);
CheckResult check_theta_invariants(const std::vector<MatrixEntry>& matrix);
CheckResult check_residue_sweeps(long qmax);
CheckResult check_restriction_matrix();

}  // namespace chatelet
