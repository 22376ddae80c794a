#pragma once

// Exact flow probabilities through truncated multilinear polynomials.
//
// Work in Q[z_v : v vertex] modulo z_v^2 = 0. An edge {u, v} contributes the
// factor (1/4)(1 + z_u + z_v); the truncated product over all edges collects,
// at the monomial z_S, exactly the probability that a uniformly random
// prescription is a flow whose vertex anomaly pattern is 1 on S and 0 off S.
// Evaluating at z = 1 (summing all coefficients) gives the flow probability.
//
// Subsets are stored as 64-bit vertex masks, so edges must live on vertex ids
// below 64; larger inputs get a size error (they are far beyond exact reach
// regardless).

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "morseflow/complex.hpp"
#include "morseflow/rational.hpp"

namespace morseflow {

struct TruncatedPolynomial {
  uint64_t support = 0;  // union of all subset masks
  std::unordered_map<uint64_t, Rational> coeffs;

  Rational coefficient(uint64_t mask) const;
  Rational value_at_one() const;  // sum of all coefficients
  int term_count() const { return static_cast<int>(coeffs.size()); }
};

TruncatedPolynomial one_poly();
TruncatedPolynomial edge_poly(int u, int v);

// T[a * b]: cross terms whose subsets overlap would square a variable and are
// dropped by the truncation.
TruncatedPolynomial truncated_product(const TruncatedPolynomial& a,
                                      const TruncatedPolynomial& b);

// Edge order used to fold the product: greedy by connectivity, so that each
// new edge shares a vertex with the part already folded whenever possible.
// Keeps intermediate supports (and term counts) small.
std::vector<int> connectivity_edge_order(const Graph& g);

TruncatedPolynomial graph_poly(const Graph& g);

// Flow probability of the graph. 1 for an edgeless graph.
Rational prob(const Graph& g);

struct AnomalyConstraint {
  std::vector<int> vertices;  // distinct vertex ids
  std::vector<int> values;    // anomaly required at each: 0 or 1
};

// Probability of being a flow whose anomaly equals the given values on the
// given vertices (joint with the flow event; unconstrained elsewhere).
// A required value > 1 has probability 0 on a flow.
Rational profile_prob(const Graph& g, const AnomalyConstraint& c);

// Polynomial of the quotient obtained by identifying the vertices inside each
// class: substitute one variable per class and re-truncate.
TruncatedPolynomial quotient_poly(const Graph& g, const std::vector<std::vector<int>>& classes);

// Flow probability of that quotient, computed without building the quotient
// graph (which may not even be simple).
Rational quotient_prob(const Graph& g, const std::vector<std::vector<int>>& classes);

}  // namespace morseflow
