#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qconnect {

struct CheckResult {
  std::string id;
  /// What the check establishes, e.g. "quesne-identity".
  std::string anchor;
  bool passed = false;
  double elapsed_ms = 0.0;
  /// Empty when passed.
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  int max_n = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Suites: all, qexp, hermite, laguerre, gegenbauer, sumrules, limits.
const std::vector<std::string>& verification_suites();

/// Runs one suite for indices up to max_n. A q sample in (0, 1) adds floating-point
/// cross-checks against independent double-precision formulas.
/// Throws std::invalid_argument for an unknown suite or negative max_n.
VerificationReport run_verification(const std::string& suite, int max_n, std::optional<double> q_sample = std::nullopt);

}  // namespace qconnect
