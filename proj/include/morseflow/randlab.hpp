#pragma once

// Randomized laboratory: Monte Carlo flow probabilities, random graph models,
// threshold scans over the entropy h, exact tree extremes, and the convexity
// identity for disjoint unions.

#include <cstdint>
#include <vector>

#include "morseflow/complex.hpp"
#include "morseflow/rational.hpp"

namespace morseflow {

struct McEstimate {
  uint64_t samples = 0;
  uint64_t hits = 0;
  double estimate = 0.0;
  double ci_half_width = 0.0;  // 95%; Wilson when hits are 0 or all
  double ci_low = 0.0;
  double ci_high = 0.0;
  uint64_t seed = 0;
};

// Samples uniformly random prescriptions. Chunked with one RNG substream per
// chunk, so the result depends only on (samples, seed), not on jobs.
McEstimate mc_prob(const Graph& g, uint64_t samples, uint64_t seed, int jobs = 1);

struct HEstimate {
  double value = 0.0;
  bool upper_bound_only = false;  // set when hits == 0: only log(ci_high)/N is known
};

HEstimate mc_h(const McEstimate& e, long long edge_count);

// Erdos-Renyi models; edges drawn in lexicographic pair order.
Graph sample_gnp(int n, double p, uint64_t seed);
Graph sample_gnN(int n, long long edge_target, uint64_t seed);

enum class HEngine { Auto, Poly, Brute, Mc };

struct ThresholdCell {
  long long edge_target = 0;
  uint64_t samples = 0;
  uint64_t hits = 0;        // graphs with h <= x
  double fraction = 0.0;
  double ci_half_width = 0.0;
};

struct ThresholdScan {
  double x = 0.0;
  int n = 0;
  uint64_t seed = 0;
  std::vector<ThresholdCell> cells;
};

// Fraction of G(n, N) samples with h <= x per edge target. x must lie strictly
// between log(1/4) and log(3/4), the attainable range on nonempty graphs.
// Auto engine: exact polynomial up to n = 20 vertices (term count can reach
// 2^n on dense graphs), else brute force when 4^N fits the oracle limit, else
// Monte Carlo (with mc_h's upper-bound handling when no flow is hit).
ThresholdScan threshold_scan(double x, int n, const std::vector<long long>& edge_grid,
                             uint64_t samples_per_cell, uint64_t seed,
                             HEngine engine = HEngine::Auto, uint64_t mc_samples = 200000);

// Exact flow probability of a forest by a linear two-state sweep: for each
// vertex, track the flow weight with boundary anomaly 0 or 1 at that vertex.
Rational tree_prob(const Graph& g);

struct TreeExtremes {
  int n = 0;                // edges per tree (n+1 labeled vertices)
  uint64_t trees_seen = 0;
  Rational p_min, p_max;    // extremes are decided on exact probabilities
  double h_min = 0.0, h_max = 0.0;
  Graph argmin, argmax;
};

// Exhaustive over all (n+1)^(n-1) labeled trees (n <= 8), or sampled from
// uniformly random trees via random linear-encoding sequences.
TreeExtremes tree_extremes(int n, bool exhaustive, uint64_t samples = 0, uint64_t seed = 0);

struct ConvexityReport {
  Rational p_left, p_right, p_union;
  double h_left = 0.0, h_right = 0.0;
  double h_union = 0.0;
  double h_mix = 0.0;        // edge-weighted average of h_left, h_right
  bool product_exact = false;
  bool mix_close = false;    // |h_union - h_mix| < 1e-10
};

// Checks P(union) = P(a) P(b) exactly for the disjoint union and the induced
// h identity in floats. Both graphs must have at least one edge.
ConvexityReport convexity_check(const Graph& a, const Graph& b);

}  // namespace morseflow
