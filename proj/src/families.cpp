#include "morseflow/families.hpp"

#include <cmath>

#include "morseflow/errors.hpp"

namespace morseflow {

namespace {

// 2x2 rational matrix, row-major.
struct Mat2 {
  Rational a, b, c, d;
};

Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 mat_pow(Mat2 base, long e) {
  Mat2 r{1, 0, 0, 1};
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

// One transfer step: append an edge to the open end of the path.
Mat2 transfer_matrix() {
  return {make_rational(1, 2), make_rational(1, 4),
          make_rational(1, 4), make_rational(1, 4)};
}

Rational pow2_inv(long e) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return make_rational(1, d);
}

}  // namespace

PathState path_state(long n) {
  if (n < 1) throw InputError("path state needs n >= 1");
  Mat2 m = mat_pow(transfer_matrix(), n - 1);
  PathState s;
  s.n = n;
  const Rational q = make_rational(1, 4);
  // One edge, resolved by the anomaly pair at its two endpoints.
  const Rational start0[2] = {q, q};            // anomaly 0 at the fixed end
  const Rational start1[2] = {q, Rational(0)};  // anomaly 1 at the fixed end
  s.pp[0][0] = m.a * start0[0] + m.b * start0[1];
  s.pp[0][1] = m.c * start0[0] + m.d * start0[1];
  s.pp[1][0] = m.a * start1[0] + m.b * start1[1];
  s.pp[1][1] = m.c * start1[0] + m.d * start1[1];
  s.p0 = s.pp[0][0] + s.pp[1][0];
  s.p1 = s.pp[0][1] + s.pp[1][1];
  return s;
}

Rational path_prob(long n) { return path_state(n).p(); }

std::vector<Rational> path_series(int count) {
  if (count < 1) throw InputError("series needs at least one term");
  std::vector<Rational> p;
  p.reserve(count);
  p.push_back(make_rational(3, 4));
  if (count >= 2) p.push_back(make_rational(1, 2));
  const Rational a = make_rational(3, 4), b = make_rational(1, 16);
  for (int k = 2; k < count; ++k) p.push_back(a * p[k - 1] - b * p[k - 2]);
  return p;
}

Rational star_prob(long n) {
  if (n < 1) throw InputError("star probability needs n >= 1");
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
  return make_rational(mpz_class(n + 2), den);
}

Rational cycle_prob(long n) {
  if (n < 3) throw InputError("cycle probability needs n >= 3");
  PathState s = path_state(n);
  // Identify the two path ends: patterns (0,0), (0,1) and (1,0) survive, the
  // mixed ones merging to a single anomaly-1 vertex.
  return s.pp[0][0] + s.pp[0][1] + s.pp[1][0];
}

CompleteState complete_coeffs(int n) {
  if (n < 3) throw InputError("complete-graph coefficients need n >= 3");
  CompleteState s;
  s.n = 3;
  s.c = {1, 2, 3, 2};
  while (s.n < n) {
    const int t = s.n;
    std::vector<mpz_class> next(t + 2);
    mpz_class bin;
    for (int k = 0; k <= t; ++k) {
      mpz_class sum = 0;
      for (int j = 0; j <= k; ++j) {
        mpz_bin_uiui(bin.get_mpz_t(), k, j);
        sum += bin * s.c[j];
      }
      next[k] = sum;
    }
    mpz_class top = 0;
    for (int k = 1; k <= t; ++k) {
      mpz_bin_uiui(bin.get_mpz_t(), t, k);
      top += k * bin * s.c[k];
    }
    next[t + 1] = top;
    s.c = std::move(next);
    ++s.n;
  }
  return s;
}

Rational complete_prob(int n) {
  CompleteState s = complete_coeffs(n);
  mpz_class sum = 0, bin;
  for (int k = 0; k <= n; ++k) {
    mpz_bin_uiui(bin.get_mpz_t(), n, k);
    sum += bin * s.c[k];
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 4, static_cast<unsigned long>(n) * (n - 1) / 2);
  return make_rational(sum, den);
}

std::pair<Rational, Rational> complete_bounds(int n) {
  if (n < 3) throw InputError("complete-graph bounds need n >= 3");
  mpz_class den4;
  mpz_ui_pow_ui(den4.get_mpz_t(), 4, static_cast<unsigned long>(n) * (n - 1) / 2);
  mpz_class lo_num, lo_den, hi_num;
  mpz_ui_pow_ui(lo_num.get_mpz_t(), static_cast<unsigned long>(n + 2), static_cast<unsigned long>(n));
  mpz_ui_pow_ui(lo_den.get_mpz_t(), 2, static_cast<unsigned long>(n));
  mpz_ui_pow_ui(hi_num.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n));
  return {make_rational(lo_num, lo_den * den4), make_rational(hi_num, den4)};
}

Rational octopus_prob(const std::vector<long>& arms) {
  if (arms.size() < 3) throw InputError("octopus needs at least three arms");
  Rational product = 1;
  Rational ratio_sum = 0;
  for (long n : arms) {
    PathState s = path_state(n);  // rejects n < 1
    product *= s.p0;
    ratio_sum += s.p1 / s.p0;
  }
  return product * (1 + ratio_sum);
}

Rational dandelion_prob(long n, long m) {
  if (n < 1 || m < 1) throw InputError("dandelion needs n >= 1 and m >= 1");
  PathState s = path_state(n);
  return s.p0 * pow2_inv(m) * (1 + s.p1 / s.p0 + make_rational(m, 2));
}

double h_invariant(const Rational& p, long long edge_count) {
  if (edge_count < 0) throw InputError("negative edge count");
  if (edge_count == 0) {
    if (p != 1) throw InputError("edgeless graph must have probability 1");
    return 0.0;
  }
  if (sgn(p) <= 0 || p > 1) throw InputError("probability must lie in (0, 1]");
  return rational_log(p) / static_cast<double>(edge_count);
}

GrowthConstants growth_constants() {
  GrowthConstants g;
  const double s5 = std::sqrt(5.0);
  g.lambda_plus = (3.0 + s5) / 8.0;
  g.lambda_minus = (3.0 - s5) / 8.0;
  g.log_r = std::log(g.lambda_plus);
  g.log_quarter = std::log(0.25);
  g.log_half = std::log(0.5);
  g.log_three_quarters = std::log(0.75);
  return g;
}

}  // namespace morseflow
