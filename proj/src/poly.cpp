#include "morseflow/poly.hpp"

#include <algorithm>
#include <bit>

#include "morseflow/errors.hpp"

namespace morseflow {

Rational TruncatedPolynomial::coefficient(uint64_t mask) const {
  auto it = coeffs.find(mask);
  return it == coeffs.end() ? Rational(0) : it->second;
}

Rational TruncatedPolynomial::value_at_one() const {
  Rational s = 0;
  for (const auto& [mask, c] : coeffs) s += c;
  return s;
}

TruncatedPolynomial one_poly() {
  TruncatedPolynomial p;
  p.coeffs[0] = 1;
  return p;
}

static uint64_t vertex_bit(int v) {
  if (v < 0) throw InputError("negative vertex id");
  if (v >= 64) throw SizeError("polynomial engine handles vertex ids below 64");
  return uint64_t{1} << v;
}

TruncatedPolynomial edge_poly(int u, int v) {
  if (u == v) throw InputError("loop edge");
  TruncatedPolynomial p;
  Rational quarter = make_rational(1, 4);
  p.coeffs[0] = quarter;
  p.coeffs[vertex_bit(u)] = quarter;
  p.coeffs[vertex_bit(v)] = quarter;
  p.support = vertex_bit(u) | vertex_bit(v);
  return p;
}

TruncatedPolynomial truncated_product(const TruncatedPolynomial& a,
                                      const TruncatedPolynomial& b) {
  TruncatedPolynomial r;
  r.support = a.support | b.support;
  r.coeffs.reserve(a.coeffs.size() * 2);
  for (const auto& [ka, va] : a.coeffs) {
    for (const auto& [kb, vb] : b.coeffs) {
      if (ka & kb) continue;  // would square a variable
      r.coeffs[ka | kb] += va * vb;
    }
  }
  return r;
}

std::vector<int> connectivity_edge_order(const Graph& g) {
  const int m = g.edge_count();
  std::vector<int> order;
  order.reserve(m);
  std::vector<char> used(m, 0);
  std::vector<char> touched(g.n_vertices, 0);
  for (int step = 0; step < m; ++step) {
    int pick = -1;
    for (int j = 0; j < m; ++j) {
      if (used[j]) continue;
      if (order.empty() || touched[g.edges[j].first] || touched[g.edges[j].second]) {
        pick = j;
        break;
      }
    }
    if (pick == -1) {
      // Next component: lowest-indexed unused edge.
      for (int j = 0; j < m && pick == -1; ++j)
        if (!used[j]) pick = j;
    }
    used[pick] = 1;
    touched[g.edges[pick].first] = 1;
    touched[g.edges[pick].second] = 1;
    order.push_back(pick);
  }
  return order;
}

TruncatedPolynomial graph_poly(const Graph& g) {
  // Check ids before multiplying: a large graph can exhaust memory on its
  // small-id edges before a lazy check would reach the offending vertex.
  for (const auto& e : g.edges) {
    vertex_bit(e.first);
    vertex_bit(e.second);
  }
  TruncatedPolynomial acc = one_poly();
  for (int j : connectivity_edge_order(g)) {
    acc = truncated_product(acc, edge_poly(g.edges[j].first, g.edges[j].second));
  }
  return acc;
}

Rational prob(const Graph& g) {
  if (g.edges.empty()) return 1;
  return graph_poly(g).value_at_one();
}

Rational profile_prob(const Graph& g, const AnomalyConstraint& c) {
  if (c.vertices.size() != c.values.size())
    throw InputError("profile constraint sizes differ");
  uint64_t s_mask = 0, ones_mask = 0;
  for (size_t i = 0; i < c.vertices.size(); ++i) {
    int v = c.vertices[i];
    if (v < 0 || v >= g.n_vertices) throw InputError("profile vertex out of range");
    uint64_t bit = vertex_bit(v);
    if (s_mask & bit) throw InputError("repeated profile vertex");
    s_mask |= bit;
    if (c.values[i] < 0) throw InputError("negative anomaly value");
    if (c.values[i] > 1) return 0;  // a flow never exceeds anomaly 1
    if (c.values[i] == 1) ones_mask |= bit;
  }
  if (g.edges.empty()) return ones_mask == 0 ? Rational(1) : Rational(0);
  TruncatedPolynomial p = graph_poly(g);
  Rational sum = 0;
  for (const auto& [mask, coeff] : p.coeffs)
    if ((mask & s_mask) == ones_mask) sum += coeff;
  return sum;
}

TruncatedPolynomial quotient_poly(const Graph& g, const std::vector<std::vector<int>>& classes) {
  std::vector<int> projection(g.n_vertices, -1);
  for (size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].empty()) throw InputError("empty quotient class");
    for (int v : classes[k]) {
      if (v < 0 || v >= g.n_vertices) throw InputError("quotient class vertex out of range");
      if (projection[v] != -1) throw InputError("vertex in two quotient classes");
      projection[v] = static_cast<int>(k);
    }
  }
  for (int v = 0; v < g.n_vertices; ++v)
    if (projection[v] == -1) throw InputError("vertex missing from quotient classes");

  TruncatedPolynomial p = graph_poly(g);
  TruncatedPolynomial q;
  for (const auto& [mask, coeff] : p.coeffs) {
    // Substitute the class variable for each member; two members of one class
    // in the same monomial square it away.
    uint64_t remapped = 0;
    bool dropped = false;
    for (uint64_t rest = mask; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      uint64_t bit = vertex_bit(projection[v]);
      if (remapped & bit) {
        dropped = true;
        break;
      }
      remapped |= bit;
    }
    if (dropped) continue;
    q.coeffs[remapped] += coeff;
    q.support |= remapped;
  }
  return q;
}

Rational quotient_prob(const Graph& g, const std::vector<std::vector<int>>& classes) {
  if (g.edges.empty()) return 1;
  return quotient_poly(g, classes).value_at_one();
}

}  // namespace morseflow
