#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace regretlab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Deterministic invariant checks: streaming vs direct RSR on random traces, the
/// repetition-wrapper trace property, Fabian weights, ASR/RSR monotonicity, Shamir probe
/// geometry, evaluation accounting for every algorithm and slope recovery on power laws.
std::vector<CheckResult> run_property_checks(std::uint64_t seed = 1);

/// Noise-free convergence: Shamir and Fabian reach SR <= 1e-4 and the (1+1)-ES reaches
/// SR <= 1e-8 within 10^4 evaluations, in every one of 10 replicates.
std::vector<CheckResult> run_noise_free_checks(std::uint64_t seed = 1);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace regretlab
