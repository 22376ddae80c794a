#pragma once

// Brute-force enumeration oracle. Deliberately dumb: walk every prescription,
// test the definitions directly, count. Used to validate every other engine.

#include <cstdint>
#include <optional>
#include <vector>

#include "morseflow/complex.hpp"
#include "morseflow/rational.hpp"

namespace morseflow {

struct FlowCensus {
  uint64_t total = 0;    // prescriptions enumerated
  uint64_t flows = 0;
  uint64_t acyclic = 0;  // acyclic flows
  std::vector<int> subset;  // vertices whose anomaly pattern was tallied
  // (pattern, count): pattern bit i set <=> anomaly 1 at subset[i]; flows only.
  std::vector<std::pair<uint64_t, uint64_t>> profiles;

  Rational flow_probability() const;
  Rational profile_probability(uint64_t pattern) const;  // 0 if pattern absent
};

inline constexpr uint64_t kOracleLimit = uint64_t{1} << 24;  // 4^12

// Enumerates all 4^N prescriptions of the graph. subset defaults to all
// vertices. Refuses when 4^N exceeds limit (use the polynomial engine or
// Monte Carlo instead). Chunked; results independent of the job count.
FlowCensus brute_force_census(const Graph& g,
                              const std::optional<std::vector<int>>& subset = std::nullopt,
                              uint64_t limit = kOracleLimit, int jobs = 1);

// Enumerates all 2^E sign patterns on the Hasse diagram of a complex.
// Counts only (no vertex profiles).
FlowCensus brute_force_complex(const SimplicialComplex& c,
                               uint64_t limit = kOracleLimit, int jobs = 1);

}  // namespace morseflow
