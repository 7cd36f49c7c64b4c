#pragma once

// Cross-checks of the closed-form series against the brute-force oracle.

#include <cstdint>
#include <string>
#include <vector>

#include "eqhilb/oracle.hpp"
#include "eqhilb/orbit.hpp"

namespace eqhilb {

enum class CheckStatus { passed, failed, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// nullptr when nothing failed.
  const CheckResult* first_failure() const;
};

struct VerifyOptions {
  std::int64_t nmax = 8;
  std::int64_t degmax = 10;
  std::size_t taylor_guard = default_taylor_guard;
};

/// Runs, in order: gtilde divisibility, reducedness, small-r numerators,
/// expansion against oracle tables, degree sequence, dimension, the
/// Hilbert-numerator recursion, Taylor/pivot agreement, then the closed
/// degree formula, the degree recursion, denominator factor signs and the
/// degree growth trend. Throws Error(invalid_truncation) for negative bounds.
VerificationReport verify_orbit(const OrbitMonomial& orb, const VerifyOptions& options);

} // namespace eqhilb
