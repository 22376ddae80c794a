#pragma once

// Cross-engine verification harness behind `morseflow verify`: closed forms vs
// the polynomial engine vs the brute-force oracle, plus the pinned reference
// values and the asymptotic trends. inject_fault corrupts one expected value
// on purpose, proving the harness actually trips on a mismatch.

#include <cstdint>
#include <string>
#include <vector>

namespace morseflow {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;  // filled on failure (and for a few informative passes)
};

struct VerifyOptions {
  bool deep = false;       // add randomized cross-checks on top of the fixed ones
  uint64_t seed = 20260822;
  bool inject_fault = false;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opt);

}  // namespace morseflow
