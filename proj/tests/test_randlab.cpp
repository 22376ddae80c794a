#include "morseflow/randlab.hpp"

#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "morseflow/complex.hpp"
#include "morseflow/errors.hpp"
#include "morseflow/families.hpp"
#include "morseflow/poly.hpp"
#include "morseflow/rational.hpp"
#include "morseflow/rng.hpp"

using namespace morseflow;

TEST_CASE("monte carlo is seed deterministic and job independent") {
  Graph g = cycle_graph(4);
  McEstimate a = mc_prob(g, 300000, 99);
  McEstimate b = mc_prob(g, 300000, 99);
  McEstimate c = mc_prob(g, 300000, 99, 4);
  CHECK(a.hits == b.hits);
  CHECK(a.hits == c.hits);
  CHECK(a.estimate == c.estimate);
  McEstimate other = mc_prob(g, 300000, 100);
  CHECK(a.hits != other.hits);  // astronomically unlikely to collide
}

TEST_CASE("monte carlo brackets the exact value") {
  Graph g = cycle_graph(4);
  const double exact = rational_to_double(prob(g));
  McEstimate e = mc_prob(g, 500000, 20260822);
  CHECK(std::abs(e.estimate - exact) < 5 * e.ci_half_width);
  CHECK(e.ci_low <= e.estimate);
  CHECK(e.estimate <= e.ci_high);
}

TEST_CASE("monte carlo boundary cases") {
  // edgeless: every prescription is a flow
  McEstimate full = mc_prob(make_graph(3, {}), 1000, 7);
  CHECK(full.hits == 1000);
  CHECK(full.estimate == 1.0);
  CHECK(full.ci_high == 1.0);
  CHECK(full.ci_low < 1.0);  // Wilson keeps the interval honest at the edge
  CHECK_THROWS_AS(mc_prob(make_graph(2, {{0, 1}}), 0, 7), InputError);
}

TEST_CASE("entropy from a zero-hit estimate is an upper bound") {
  // K_8 at 28 edges: P is far below 1/200, so 200 samples all miss
  McEstimate e = mc_prob(complete_graph(8), 200, 5);
  REQUIRE(e.hits == 0);
  HEstimate h = mc_h(e, 28);
  CHECK(h.upper_bound_only);
  CHECK(h.value < 0.0);
  CHECK(h.value == std::log(e.ci_high) / 28.0);

  McEstimate good = mc_prob(path_graph(1), 100000, 5);
  HEstimate h2 = mc_h(good, 1);
  CHECK_FALSE(h2.upper_bound_only);
  CHECK(h2.value == doctest::Approx(std::log(0.75)).epsilon(0.05));
  CHECK(mc_h(good, 0).value == 0.0);
}

TEST_CASE("gnp sampler") {
  CHECK(sample_gnp(6, 0.0, 3).edge_count() == 0);
  CHECK(sample_gnp(6, 1.0, 3) == complete_graph(6));
  Graph a = sample_gnp(10, 0.4, 11);
  Graph b = sample_gnp(10, 0.4, 11);
  CHECK(a == b);
  CHECK_THROWS_AS(sample_gnp(5, 1.5, 3), InputError);
}

TEST_CASE("fixed-size sampler") {
  for (long long target : {0LL, 3LL, 10LL}) {
    Graph g = sample_gnN(5, target, 17);
    CHECK(g.edge_count() == target);
    CHECK(g == sample_gnN(5, target, 17));
  }
  // different seeds explore different graphs
  std::set<std::vector<std::pair<int, int>>> seen;
  for (uint64_t s = 0; s < 12; ++s) seen.insert(sample_gnN(6, 5, s).edges);
  CHECK(seen.size() > 6);
  CHECK_THROWS_AS(sample_gnN(4, 7, 1), InputError);
}

TEST_CASE("threshold scan is deterministic and engine independent") {
  const std::vector<long long> grid{1, 3, 5, 7};
  ThresholdScan a = threshold_scan(-0.5, 6, grid, 40, 123, HEngine::Poly);
  ThresholdScan b = threshold_scan(-0.5, 6, grid, 40, 123, HEngine::Poly);
  ThresholdScan c = threshold_scan(-0.5, 6, grid, 40, 123, HEngine::Brute);
  REQUIRE(a.cells.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(a.cells[i].hits == b.cells[i].hits);
    CHECK(a.cells[i].hits == c.cells[i].hits);  // both engines are exact
    CHECK(a.cells[i].fraction >= 0.0);
    CHECK(a.cells[i].fraction <= 1.0);
  }
}

TEST_CASE("threshold scan validation") {
  CHECK_THROWS_AS(threshold_scan(0.5, 6, {1}, 10, 1), InputError);
  CHECK_THROWS_AS(threshold_scan(-2.0, 6, {1}, 10, 1), InputError);
  CHECK_THROWS_AS(threshold_scan(-0.5, 1, {0}, 10, 1), InputError);
  CHECK_THROWS_AS(threshold_scan(-0.5, 6, {1}, 0, 1), InputError);
  CHECK_THROWS_AS(threshold_scan(-0.5, 6, {20}, 10, 1), InputError);
}

TEST_CASE("tree probability agrees with the polynomial engine") {
  CHECK(tree_prob(path_graph(4)) == path_prob(4));
  CHECK(tree_prob(star_graph(5)) == star_prob(5));
  CHECK(tree_prob(octopus_graph({2, 2, 1})) == octopus_prob({2, 2, 1}));
  CHECK(tree_prob(dandelion_graph(2, 3)) == dandelion_prob(2, 3));
  // forests multiply over components
  Graph forest = disjoint_union(path_graph(2), star_graph(3));
  CHECK(tree_prob(forest) == path_prob(2) * star_prob(3));
  CHECK(tree_prob(make_graph(3, {})) == 1);
  CHECK_THROWS_AS(tree_prob(cycle_graph(3)), InputError);
}

TEST_CASE("tree extremes at small sizes") {
  TreeExtremes t2 = tree_extremes(2, true);
  CHECK(t2.trees_seen == 3);
  CHECK(t2.p_min == make_rational(1, 2));
  CHECK(t2.p_max == make_rational(1, 2));  // every tree on 3 vertices is a path

  TreeExtremes t3 = tree_extremes(3, true);
  CHECK(t3.trees_seen == 16);
  CHECK(t3.p_min == make_rational(5, 16));   // the star
  CHECK(t3.p_max == make_rational(21, 64));  // the path
  CHECK(tree_prob(t3.argmin) == t3.p_min);
  CHECK(tree_prob(t3.argmax) == t3.p_max);

  TreeExtremes t4 = tree_extremes(4, true);
  CHECK(t4.trees_seen == 125);
  CHECK(t4.p_min == make_rational(3, 16));
  CHECK(t4.p_max == make_rational(55, 256));
  CHECK(t4.h_min < t4.h_max);
}

TEST_CASE("paths and stars stay extremal through n = 6") {
  for (int n = 5; n <= 6; ++n) {
    TreeExtremes t = tree_extremes(n, true);
    uint64_t expect = 1;
    for (int i = 0; i < n - 1; ++i) expect *= static_cast<uint64_t>(n + 1);
    CHECK(t.trees_seen == expect);
    CHECK(t.p_min == star_prob(n));
    CHECK(t.p_max == path_prob(n));
  }
}

TEST_CASE("sampled tree scan") {
  TreeExtremes s = tree_extremes(6, false, 300, 42);
  CHECK(s.trees_seen == 300);
  TreeExtremes again = tree_extremes(6, false, 300, 42);
  CHECK(s.p_min == again.p_min);
  CHECK(s.p_max == again.p_max);
  // sampling cannot beat the exhaustive extremes
  TreeExtremes full = tree_extremes(6, true);
  CHECK(s.p_min >= full.p_min);
  CHECK(s.p_max <= full.p_max);
  CHECK_THROWS_AS(tree_extremes(9, true), SizeError);
  CHECK_THROWS_AS(tree_extremes(3, false, 0, 1), InputError);
}

TEST_CASE("disjoint unions mix entropies convexly") {
  ConvexityReport r = convexity_check(path_graph(2), cycle_graph(3));
  CHECK(r.product_exact);
  CHECK(r.mix_close);
  CHECK(r.p_union == path_prob(2) * cycle_prob(3));
  const double lo = std::min(r.h_left, r.h_right), hi = std::max(r.h_left, r.h_right);
  CHECK(r.h_union >= lo);
  CHECK(r.h_union <= hi);
  CHECK_THROWS_AS(convexity_check(path_graph(1), make_graph(2, {})), InputError);
}

TEST_CASE("substreams differ and reproduce") {
  Rng a = Rng::substream(5, 0);
  Rng b = Rng::substream(5, 1);
  Rng a2 = Rng::substream(5, 0);
  CHECK(a.word() != b.word());
  Rng a3 = Rng::substream(5, 0);
  CHECK(a3.word() == a2.word());
  CHECK(mix_seed(1, 2, 3) == mix_seed(1, 2, 3));
  CHECK(mix_seed(1, 2, 3) != mix_seed(1, 3, 2));
}
