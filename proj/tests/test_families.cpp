#include "morseflow/families.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "morseflow/complex.hpp"
#include "morseflow/errors.hpp"
#include "morseflow/poly.hpp"
#include "morseflow/rational.hpp"

using namespace morseflow;

TEST_CASE("path series opening values") {
  std::vector<Rational> expect{
      make_rational(3, 4),     make_rational(1, 2),     make_rational(21, 64),
      make_rational(55, 256),  make_rational(9, 64),    make_rational(377, 4096),
      make_rational(987, 16384), make_rational(323, 8192)};
  CHECK(path_series(8) == expect);
}

TEST_CASE("path recurrence") {
  std::vector<Rational> p = path_series(30);
  for (size_t i = 2; i < p.size(); ++i)
    CHECK(p[i] == make_rational(3, 4) * p[i - 1] - make_rational(1, 16) * p[i - 2]);
  for (long n = 1; n <= 30; ++n) CHECK(path_prob(n) == p[n - 1]);
}

TEST_CASE("path end-anomaly refinement") {
  PathState s1 = path_state(1);
  CHECK(s1.pp[0][0] == make_rational(1, 4));
  CHECK(s1.pp[0][1] == make_rational(1, 4));
  CHECK(s1.pp[1][0] == make_rational(1, 4));
  CHECK(s1.pp[1][1] == 0);
  CHECK(s1.p0 == make_rational(1, 2));
  CHECK(s1.p1 == make_rational(1, 4));

  // refinements agree with the exact joint profiles
  for (long n = 1; n <= 5; ++n) {
    PathState s = path_state(n);
    Graph g = path_graph(static_cast<int>(n));
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; b <= 1; ++b)
        CHECK(s.pp[a][b] == profile_prob(g, {{0, static_cast<int>(n)}, {a, b}}));
    CHECK(s.p0 == profile_prob(g, {{static_cast<int>(n)}, {0}}));
    CHECK(s.p1 == profile_prob(g, {{static_cast<int>(n)}, {1}}));
    CHECK(s.p() == prob(g));
  }
}

TEST_CASE("stars") {
  for (long n = 1; n <= 10; ++n) {
    CHECK(star_prob(n) ==
          make_rational(n + 2, 1) / rational_pow(make_rational(2, 1), n + 1));
    CHECK(star_prob(n) == prob(star_graph(static_cast<int>(n))));
  }
  CHECK(star_prob(3) == make_rational(5, 16));
  CHECK_THROWS_AS(star_prob(0), InputError);
}

TEST_CASE("cycles") {
  CHECK(cycle_prob(3) == make_rational(9, 32));
  CHECK(cycle_prob(4) == make_rational(47, 256));
  CHECK(cycle_prob(5) == make_rational(123, 1024));
  for (long n = 3; n <= 8; ++n) CHECK(cycle_prob(n) == prob(cycle_graph(static_cast<int>(n))));
  CHECK_THROWS_AS(cycle_prob(2), InputError);
}

TEST_CASE("complete graph coefficients") {
  CHECK(complete_coeffs(3).c == std::vector<mpz_class>{1, 2, 3, 2});
  CHECK(complete_coeffs(4).c == std::vector<mpz_class>{1, 3, 8, 18, 30});
  CHECK(complete_coeffs(5).c == std::vector<mpz_class>{1, 4, 15, 52, 163, 444});
  // the top coefficient of the next size counts the flows of this one
  for (int n = 3; n <= 8; ++n) {
    mpz_class flows_n;
    mpz_ui_pow_ui(flows_n.get_mpz_t(), 4, static_cast<unsigned long>(n) * (n - 1) / 2);
    flows_n = flows_n * complete_prob(n).get_num() / complete_prob(n).get_den();
    CHECK(complete_coeffs(n + 1).c[n] == flows_n);
  }
  CHECK_THROWS_AS(complete_coeffs(2), InputError);
}

TEST_CASE("complete graph probabilities") {
  CHECK(complete_prob(3) == cycle_prob(3));
  CHECK(complete_prob(4) == make_rational(163, 4096));
  CHECK(complete_prob(5) == prob(complete_graph(5)));
  CHECK(complete_prob(6) == prob(complete_graph(6)));
}

TEST_CASE("complete graph bounds") {
  auto [lo4, hi4] = complete_bounds(4);
  CHECK(lo4 == make_rational(81, 4096));
  CHECK(hi4 == make_rational(625, 4096));
  for (int n = 3; n <= 12; ++n) {
    auto [lo, hi] = complete_bounds(n);
    const Rational p = complete_prob(n);
    CHECK(lo <= p);
    CHECK(p <= hi);
  }
}

TEST_CASE("per-coefficient bounds and their one exception") {
  for (int n = 3; n <= 12; ++n) {
    CompleteState s = complete_coeffs(n);
    for (int k = 0; k <= n; ++k) {
      mpz_class nk, two_k;
      mpz_ui_pow_ui(nk.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
      mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
      CHECK(s.c[k] <= nk);
      if (n == 3 && k == 3) {
        // c_3(3) = 2 sits below (3/2)^3; the lower bound starts at n = 4
        CHECK(s.c[k] * two_k < nk);
      } else {
        CHECK(nk <= s.c[k] * two_k);
      }
    }
  }
}

TEST_CASE("octopus") {
  CHECK(octopus_prob({1, 1, 1}) == star_prob(3));
  CHECK(octopus_prob({1, 1, 1, 1}) == star_prob(4));
  CHECK(octopus_prob({2, 1, 1}) == make_rational(13, 64));
  for (const std::vector<long>& arms :
       {std::vector<long>{2, 2, 1}, {3, 2, 1}, {2, 2, 2}, {3, 1, 1, 1}}) {
    std::vector<int> iarms(arms.begin(), arms.end());
    CHECK(octopus_prob(arms) == prob(octopus_graph(iarms)));
  }
  CHECK_THROWS_AS(octopus_prob({1, 1}), InputError);
  CHECK_THROWS_AS(octopus_prob({0, 1, 1}), InputError);
}

TEST_CASE("dandelion") {
  for (long m = 1; m <= 6; ++m) CHECK(dandelion_prob(1, m) == star_prob(m + 1));
  CHECK(dandelion_prob(2, 3) == make_rational(31, 256));
  CHECK(dandelion_prob(2, 2) == octopus_prob({2, 1, 1}));
  for (long n = 1; n <= 3; ++n)
    for (long m = 1; m <= 3; ++m)
      CHECK(dandelion_prob(n, m) ==
            prob(dandelion_graph(static_cast<int>(n), static_cast<int>(m))));
  CHECK_THROWS_AS(dandelion_prob(0, 1), InputError);
  CHECK_THROWS_AS(dandelion_prob(1, 0), InputError);
}

TEST_CASE("entropy per edge") {
  CHECK(h_invariant(Rational(1), 0) == 0.0);
  CHECK(h_invariant(make_rational(3, 4), 1) == doctest::Approx(std::log(0.75)).epsilon(1e-14));
  // large exact inputs keep full double accuracy
  const Rational tiny = rational_pow(make_rational(3, 4), 5000);
  CHECK(h_invariant(tiny, 5000) == doctest::Approx(std::log(0.75)).epsilon(1e-13));
  CHECK_THROWS_AS(h_invariant(Rational(0), 3), InputError);
  CHECK_THROWS_AS(h_invariant(make_rational(5, 4), 3), InputError);
  CHECK_THROWS_AS(h_invariant(make_rational(1, 2), 0), InputError);
}

TEST_CASE("growth constants") {
  GrowthConstants gc = growth_constants();
  CHECK(gc.lambda_plus + gc.lambda_minus == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(gc.lambda_plus * gc.lambda_minus == doctest::Approx(1.0 / 16).epsilon(1e-15));
  CHECK(gc.log_r == doctest::Approx(std::log(gc.lambda_plus)).epsilon(1e-15));
  CHECK(gc.log_quarter < gc.log_half);
  CHECK(gc.log_half < gc.log_three_quarters);

  // consecutive path probabilities approach the dominant eigenvalue
  std::vector<Rational> p = path_series(51);
  const double ratio = rational_to_double(p[50] / p[49]);
  CHECK(std::abs(ratio - gc.lambda_plus) < 1e-12);
}
