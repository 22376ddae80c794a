#pragma once

// Closed forms and recurrences for the standard families: paths via the
// transfer matrix, stars, cycles, complete graphs via the weighted-count
// recurrence, octopus and dandelion graphs, and the per-edge entropy h.

#include <utility>
#include <vector>

#include "morseflow/rational.hpp"

namespace morseflow {

// Flow state of the path 0-1-...-n, refined by the anomaly at the open ends.
struct PathState {
  long n = 0;
  Rational p0;        // flow with anomaly 0 at vertex n
  Rational p1;        // flow with anomaly 1 at vertex n
  Rational pp[2][2];  // pp[a][b]: anomaly a at vertex 0 and b at vertex n

  Rational p() const { return p0 + p1; }
};

// Transfer-matrix state of L_n, n >= 1. The one-step matrix is
// [[1/2, 1/4], [1/4, 1/4]] acting on (p0, p1).
PathState path_state(long n);

Rational path_prob(long n);

// p_1..p_count via the three-term recurrence
// x_{n+2} = (3/4) x_{n+1} - (1/16) x_n, seeded with 3/4, 1/2.
std::vector<Rational> path_series(int count);

// P(S_n) = (n+2) / 2^{n+1}, n >= 1.
Rational star_prob(long n);

// Closes the path into a cycle: P(C_n) = p_n(0,0) + 2 p_n(0,1), n >= 3.
Rational cycle_prob(long n);

// Weighted flow counts c_n(k) of K_n: flows weighted by anomaly-1 vertices
// among a distinguished k-subset. Seeded at n = 3 with (1, 2, 3, 2).
struct CompleteState {
  int n = 0;
  std::vector<mpz_class> c;  // c[k], k = 0..n
};

CompleteState complete_coeffs(int n);  // n >= 3
Rational complete_prob(int n);         // n >= 3

// (lower, upper) from (1 + n/2)^n <= sum <= (1 + n)^n over 4^{n(n-1)/2}.
std::pair<Rational, Rational> complete_bounds(int n);

// k >= 3 paths of the given lengths glued at a common endpoint.
Rational octopus_prob(const std::vector<long>& arms);

// One arm of length n plus m leaves at the glue vertex; n, m >= 1.
Rational dandelion_prob(long n, long m);

// h = log(p) / edge_count, natural log, accurate to double precision for
// arbitrarily large exact inputs. h = 0 for an edgeless graph.
double h_invariant(const Rational& p, long long edge_count);

struct GrowthConstants {
  double lambda_plus;   // (3 + sqrt(5)) / 8, the path growth rate r
  double lambda_minus;  // (3 - sqrt(5)) / 8
  double log_r;
  double log_quarter;
  double log_half;
  double log_three_quarters;
};

GrowthConstants growth_constants();

}  // namespace morseflow
