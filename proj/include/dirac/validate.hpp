// Fast release-gate checks behind `dirac validate`.
#ifndef DIRAC_VALIDATE_HPP
#define DIRAC_VALIDATE_HPP

#include "dirac/spectral.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace dirac::cli {

struct CheckResult {
  std::string name;
  Real deviation;
  Real tolerance;
  bool passed;
};

struct ValidateOptions {
  /// Applied to the spectral engine in the engine cross-check only.
  MassCoupling coupling = MassCoupling::standard;
};

/// massless-coherence: m = 0 off-diagonal and entropy against the closed form, t = 0..3.
/// stationary-states: eigenmodes keep their density matrix over t in [0, 5].
/// engine-cross-check: kernel vs spectral, m = 1, one step of 3 dx on the default grid.
std::vector<CheckResult> run_validation(const ValidateOptions& options = {});

void print_checks(std::ostream& out, const std::vector<CheckResult>& checks);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace dirac::cli

#endif  // DIRAC_VALIDATE_HPP
