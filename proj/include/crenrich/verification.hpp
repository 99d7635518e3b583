#pragma once

#include <string>
#include <vector>

namespace crenrich {

enum class InjectedFault { None, WrongSigmaBeta };

struct VerifyOptions {
  double alpha = 1.0;
  double beta = 1.0;
  int triangles = 20;
  unsigned long long seed = 20240611;
  InjectedFault fault = InjectedFault::None;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct VerificationSummary {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Numeric battery for one (alpha, beta) pair on random triangles: beta
/// function identities, AF3 duality, the 3x3 vertex-value systems and their
/// determinants, duality of both enriched bases, P2 reproduction and DoF
/// matching of both operators, and nonsingular unisolvence matrices.
VerificationSummary run_verification(const VerifyOptions& options);

}  // namespace crenrich
