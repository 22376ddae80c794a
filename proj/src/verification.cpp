#include "morseflow/verification.hpp"

#include <cmath>
#include <sstream>

#include "morseflow/complex.hpp"
#include "morseflow/errors.hpp"
#include "morseflow/families.hpp"
#include "morseflow/flow.hpp"
#include "morseflow/oracle.hpp"
#include "morseflow/poly.hpp"
#include "morseflow/randlab.hpp"
#include "morseflow/rng.hpp"

namespace morseflow {

namespace {

std::string rat2(const Rational& a, const Rational& b) {
  std::ostringstream os;
  os << a.get_str() << " vs " << b.get_str();
  return os.str();
}

struct Census3 {
  uint64_t total, flows, acyclic;
};

bool census_is(const FlowCensus& c, Census3 want, std::string& detail) {
  if (c.total == want.total && c.flows == want.flows && c.acyclic == want.acyclic) return true;
  std::ostringstream os;
  os << "got " << c.total << "/" << c.flows << "/" << c.acyclic << ", want " << want.total << "/"
     << want.flows << "/" << want.acyclic;
  detail = os.str();
  return false;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  std::vector<CheckResult> results;
  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    results.push_back({name, ok, ok ? "" : detail});
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name + ".exception", false, e.what());
    }
  };

  guarded("single_edge", [&] {
    const Graph l1 = path_graph(1);
    const Rational expect = make_rational(3, 4);
    check("single_edge.closed_form", path_prob(1) == expect, rat2(path_prob(1), expect));
    check("single_edge.poly", prob(l1) == expect, rat2(prob(l1), expect));
    FlowCensus c = brute_force_census(l1);
    std::string d;
    check("single_edge.census", census_is(c, {4, 3, 3}, d), d);
    // Of the four prescriptions exactly one fails, the double -1.
    HasseDiagram h = hasse(l1);
    OrientationPrescription both{{-1, -1}};
    check("single_edge.double_minus", !is_flow(h, both) && anomaly(h, both).total(2) == 2);
  });

  guarded("path_series", [&] {
    const std::vector<std::pair<long, long>> expect = {
        {3, 4},   {1, 2},     {21, 64},    {55, 256},
        {9, 64},  {377, 4096}, {987, 16384}, {323, 8192}};
    std::vector<Rational> series = path_series(50);
    bool ok = true;
    for (size_t i = 0; i < expect.size(); ++i)
      ok = ok && series[i] == make_rational(expect[i].first, expect[i].second);
    check("path_series.first_eight", ok);
    bool agree = true;
    for (long n = 1; n <= 50; ++n) agree = agree && series[n - 1] == path_prob(n);
    check("path_series.matches_transfer_matrix", agree);
    bool brute = true;
    for (long n = 1; n <= 6; ++n)
      brute = brute && brute_force_census(path_graph(n)).flow_probability() == series[n - 1];
    check("path_series.matches_census", brute);
    // (16 - 12 z + z^2) * sum p_n z^n = 12 z - z^2, coefficient by coefficient.
    bool gen = 16 * series[0] == 12 && 16 * series[1] - 12 * series[0] == -1;
    for (size_t n = 2; n < series.size(); ++n)
      gen = gen && 16 * series[n] - 12 * series[n - 1] + series[n - 2] == 0;
    check("path_series.generating_function", gen);
    // On trees every flow is acyclic; spot-check on paths.
    for (long n = 1; n <= 6; ++n) {
      FlowCensus c = brute_force_census(path_graph(n));
      check("path_series.tree_flows_acyclic." + std::to_string(n), c.flows == c.acyclic);
    }
  });

  guarded("star_values", [&] {
    bool ok = true;
    for (long n = 1; n <= 10; ++n) ok = ok && star_prob(n) == prob(star_graph(n));
    check("star_values.poly_agrees", ok);
    std::string d;
    check("star_values.census3", census_is(brute_force_census(star_graph(3)), {64, 20, 20}, d), d);
    check("star_values.census4", census_is(brute_force_census(star_graph(4)), {256, 48, 48}, d), d);
  });

  guarded("cycle_values", [&] {
    const Rational c4 = opt.inject_fault ? make_rational(48, 256) : make_rational(47, 256);
    check("cycle_values.c3", cycle_prob(3) == make_rational(9, 32), rat2(cycle_prob(3), make_rational(9, 32)));
    check("cycle_values.c4", cycle_prob(4) == c4, rat2(cycle_prob(4), c4));
    check("cycle_values.c5", cycle_prob(5) == make_rational(123, 1024), rat2(cycle_prob(5), make_rational(123, 1024)));
    std::string d;
    check("cycle_values.census3", census_is(brute_force_census(cycle_graph(3)), {64, 18, 16}, d), d);
    check("cycle_values.census4", census_is(brute_force_census(cycle_graph(4)), {256, 47, 45}, d), d);
    check("cycle_values.census5", census_is(brute_force_census(cycle_graph(5)), {1024, 123, 121}, d), d);
    bool pq = true;
    for (long n = 3; n <= 6; ++n) {
      std::vector<std::vector<int>> classes{{0, static_cast<int>(n)}};
      for (int v = 1; v < n; ++v) classes.push_back({v});
      pq = pq && quotient_prob(path_graph(n), classes) == cycle_prob(n);
    }
    check("cycle_values.path_quotient", pq);
  });

  guarded("complete_values", [&] {
    CompleteState c3 = complete_coeffs(3), c4 = complete_coeffs(4);
    check("complete_values.c3_coeffs",
          c3.c == std::vector<mpz_class>({1, 2, 3, 2}));
    check("complete_values.c4_coeffs",
          c4.c == std::vector<mpz_class>({1, 3, 8, 18, 30}));
    check("complete_values.k3_is_c3", complete_prob(3) == cycle_prob(3));
    check("complete_values.k4", complete_prob(4) == make_rational(163, 4096),
          rat2(complete_prob(4), make_rational(163, 4096)));
    std::string d;
    check("complete_values.k4_census", census_is(brute_force_census(complete_graph(4)), {4096, 163, 125}, d), d);
    check("complete_values.k5_poly", complete_prob(5) == prob(complete_graph(5)));
    check("complete_values.k6_poly", complete_prob(6) == prob(complete_graph(6)));
    bool bounds = true;
    bool corner = true;
    for (int n = 3; n <= 12; ++n) {
      auto [lo, hi] = complete_bounds(n);
      const Rational p = complete_prob(n);
      bounds = bounds && lo <= p && p <= hi;
      // Coefficient bounds (n/2)^k <= c_n(k) <= n^k drive the global ones.
      // The lower one has a single genuine exception, (n,k) = (3,3):
      // c_3(3) = 2 < 27/8.  The global bounds above still hold there.
      CompleteState s = complete_coeffs(n);
      for (int k = 0; k <= n; ++k) {
        mpz_class nk, two_k;
        mpz_ui_pow_ui(nk.get_mpz_t(), n, k);
        mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
        bounds = bounds && s.c[k] <= nk;
        if (n == 3 && k == 3)
          corner = s.c[k] == 2 && nk > s.c[k] * two_k;
        else
          bounds = bounds && nk <= s.c[k] * two_k;
      }
    }
    check("complete_values.bounds_3_to_12", bounds);
    check("complete_values.lower_bound_corner_3_3", corner);
  });

  guarded("octopus_dandelion", [&] {
    check("octopus_dandelion.o111_star", octopus_prob({1, 1, 1}) == star_prob(3));
    check("octopus_dandelion.o211", octopus_prob({2, 1, 1}) == make_rational(13, 64),
          rat2(octopus_prob({2, 1, 1}), make_rational(13, 64)));
    std::string d;
    check("octopus_dandelion.o211_census",
          census_is(brute_force_census(octopus_graph({2, 1, 1})), {256, 52, 52}, d), d);
    bool star_red = true;
    for (long m = 1; m <= 6; ++m) star_red = star_red && dandelion_prob(1, m) == star_prob(m + 1);
    check("octopus_dandelion.d1m_star", star_red);
    check("octopus_dandelion.d23", dandelion_prob(2, 3) == make_rational(31, 256),
          rat2(dandelion_prob(2, 3), make_rational(31, 256)));
    check("octopus_dandelion.d23_census",
          census_is(brute_force_census(dandelion_graph(2, 3)), {1024, 124, 124}, d), d);
    check("octopus_dandelion.d22_o211", dandelion_prob(2, 2) == octopus_prob({2, 1, 1}));
    check("octopus_dandelion.o221_poly", octopus_prob({2, 2, 1}) == prob(octopus_graph({2, 2, 1})));
    check("octopus_dandelion.d32_poly", dandelion_prob(3, 2) == prob(dandelion_graph(3, 2)));
    check("octopus_dandelion.tree_prob_agrees",
          tree_prob(octopus_graph({2, 1, 1})) == octopus_prob({2, 1, 1}) &&
              tree_prob(dandelion_graph(2, 3)) == dandelion_prob(2, 3));
  });

  guarded("profiles", [&] {
    const Graph l3 = path_graph(3);
    const Rational expect = make_rational(1, 8);
    const Rational got = profile_prob(l3, {{0, 3}, {0, 0}});
    check("profiles.l3_ends_zero", got == expect, rat2(got, expect));
    FlowCensus c = brute_force_census(l3, std::vector<int>{0, 3});
    check("profiles.l3_census_agrees", c.profile_probability(0) == expect);
    // Summing the profile over all patterns on a subset recovers the total.
    const Graph c4 = cycle_graph(4);
    Rational sum = 0;
    for (int bits = 0; bits < 8; ++bits)
      sum += profile_prob(c4, {{0, 1, 2}, {bits & 1, (bits >> 1) & 1, (bits >> 2) & 1}});
    check("profiles.c4_total", sum == cycle_prob(4), rat2(sum, cycle_prob(4)));
  });

  guarded("product_quotient", [&] {
    ConvexityReport r = convexity_check(path_graph(2), cycle_graph(3));
    check("product_quotient.product_exact", r.product_exact);
    check("product_quotient.h_mix", r.mix_close);
    std::vector<std::vector<int>> glue{{0}, {1, 2}, {3}};
    check("product_quotient.two_edges_to_l2",
          quotient_prob(disjoint_union(path_graph(1), path_graph(1)), glue) == path_prob(2));
  });

  guarded("asymptotics", [&] {
    const GrowthConstants gc = growth_constants();
    std::vector<Rational> series = path_series(51);
    const double ratio = rational_to_double(series[50] / series[49]);
    check("asymptotics.ratio_51_50", std::abs(ratio - gc.lambda_plus) < 1e-12);
    check("asymptotics.eigenvalues",
          std::abs(gc.lambda_plus * gc.lambda_plus - 0.75 * gc.lambda_plus + 0.0625) < 1e-12 &&
              std::abs(gc.lambda_minus * gc.lambda_minus - 0.75 * gc.lambda_minus + 0.0625) < 1e-12 &&
              gc.lambda_plus < 0.75);
    check("asymptotics.h_l200", std::abs(h_invariant(path_prob(200), 200) - gc.log_r) < 0.01);
    check("asymptotics.h_s60", std::abs(h_invariant(star_prob(60), 60) - gc.log_half) < 0.06);
    bool mono = true;
    double prev = 0.0;
    for (int n = 3; n <= 12; ++n) {
      const double h = h_invariant(complete_prob(n), static_cast<long long>(n) * (n - 1) / 2);
      if (n > 3) mono = mono && h < prev;
      mono = mono && h > gc.log_quarter;
      prev = h;
    }
    check("asymptotics.h_kn_decreasing_above_log_quarter", mono);
  });

  guarded("bounds", [&] {
    const std::vector<Graph> sample = {path_graph(1),         path_graph(3),
                                       cycle_graph(3),        cycle_graph(5),
                                       star_graph(4),         complete_graph(4),
                                       octopus_graph({2, 1, 1}), dandelion_graph(2, 3)};
    bool ok = true;
    for (const Graph& g : sample) {
      const Rational p = prob(g);
      const unsigned long n = g.edge_count();
      ok = ok && rational_pow(make_rational(1, 4), n) <= p &&
           p <= rational_pow(make_rational(3, 4), n);
    }
    check("bounds.window", ok);
    // The upper bound is attained exactly by disjoint unions of single edges.
    Graph m3 = path_graph(1);
    for (int i = 0; i < 2; ++i) m3 = disjoint_union(m3, path_graph(1));
    check("bounds.disjoint_edges_attain", prob(m3) == rational_pow(make_rational(3, 4), 3));
    check("bounds.connected_strict", prob(path_graph(2)) < rational_pow(make_rational(3, 4), 2));
  });

  guarded("complexes", [&] {
    std::string d;
    check("complexes.single_edge",
          census_is(brute_force_complex(build_complex({{0, 1}})), {4, 3, 3}, d), d);
    check("complexes.filled_triangle",
          census_is(brute_force_complex(build_complex({{0, 1, 2}})), {512, 42, 40}, d), d);
    check("complexes.square_boundary",
          census_is(brute_force_complex(build_complex({{0, 1}, {1, 2}, {2, 3}, {0, 3}})),
                    {256, 47, 45}, d), d);
    // The filled triangle is strictly harder to flow than its edge skeleton.
    check("complexes.filling_lowers_p",
          make_rational(42, 512) < cycle_prob(3));
  });

  guarded("flow_engine", [&] {
    const Graph c3 = cycle_graph(3);
    const HasseDiagram h = hasse(c3);
    // The rotating prescription is a flow with a directed cycle.
    OrientationPrescription rotate = all_plus(h);
    auto set_sign = [&](int parent_edge, int child_vertex, int8_t s) {
      for (size_t i = 0; i < h.edges.size(); ++i)
        if (h.dims[h.edges[i].parent] == 1 && h.edges[i].parent == parent_edge &&
            h.edges[i].child == child_vertex)
          rotate.signs[i] = s;
    };
    // faces: vertices 0,1,2 then edges {0,1}=3, {0,2}=4, {1,2}=5
    set_sign(3, 0, -1);
    set_sign(5, 1, -1);
    set_sign(4, 2, -1);
    check("flow_engine.rotating_is_flow", is_flow(h, rotate) && is_matching(h, rotate));
    check("flow_engine.rotating_is_cyclic", !is_acyclic(h, rotate));
    DeformResult d = deform_to_acyclic(h, rotate);
    check("flow_engine.deform_one_flip", d.flipped.size() == 1);
    check("flow_engine.deform_acyclic",
          is_flow(h, d.prescription) && is_acyclic(h, d.prescription) &&
              d.prescription.sign_count() == rotate.sign_count() - 1);
    MorseFunction f = morse_from_flow(h, d.prescription);
    check("flow_engine.morse_round_trip",
          flow_from_morse(h, f.values).prescription == d.prescription &&
              flow_from_morse(h, f.values).morse);
    // The dimension function itself is Morse and induces the all-plus flow.
    std::vector<long long> dim_f(h.dims.begin(), h.dims.end());
    MorsePrescription mp = flow_from_morse(h, dim_f);
    check("flow_engine.dimension_function", mp.morse && mp.prescription == all_plus(h));
  });

  if (opt.deep) {
    guarded("deep_random", [&] {
      bool poly_vs_census = true;
      bool profile_vs_census = true;
      for (int trial = 0; trial < 100; ++trial) {
        Rng rng = Rng::substream(opt.seed, 1000 + trial);
        const int n = 3 + static_cast<int>(rng.below(4));  // 3..6 vertices
        const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
        const long long target = static_cast<long long>(rng.below(std::min<long long>(max_edges, 7) + 1));
        Graph g = sample_gnN(n, target, mix_seed(opt.seed, 2000 + trial));
        FlowCensus c = brute_force_census(g);
        poly_vs_census = poly_vs_census && prob(g) == c.flow_probability();
        // Random pattern on a random subset.
        std::vector<int> sub;
        std::vector<int> vals;
        uint64_t pattern = 0;
        for (int v = 0; v < n; ++v) {
          if (rng.below(2)) continue;
          if (rng.below(2)) {
            pattern |= uint64_t{1} << sub.size();
            vals.push_back(1);
          } else {
            vals.push_back(0);
          }
          sub.push_back(v);
        }
        FlowCensus cs = brute_force_census(g, sub);
        profile_vs_census =
            profile_vs_census && profile_prob(g, {sub, vals}) == cs.profile_probability(pattern);
      }
      check("deep_random.poly_vs_census", poly_vs_census);
      check("deep_random.profile_vs_census", profile_vs_census);

      bool products = true;
      for (int trial = 0; trial < 50; ++trial) {
        Graph a = sample_gnN(4, 1 + trial % 4, mix_seed(opt.seed, 3000 + trial));
        Graph b = sample_gnN(4, 1 + (trial / 4) % 4, mix_seed(opt.seed, 4000 + trial));
        products = products && prob(disjoint_union(a, b)) == prob(a) * prob(b);
      }
      check("deep_random.products", products);

      bool quotients = true;
      for (long n = 3; n <= 8; ++n) {
        std::vector<std::vector<int>> classes{{0, static_cast<int>(n)}};
        for (int v = 1; v < n; ++v) classes.push_back({v});
        QuotientResult q = quotient(path_graph(n), classes);
        quotients = quotients && quotient_prob(path_graph(n), classes) == prob(q.graph);
      }
      check("deep_random.quotients_match_graphs", quotients);

      bool sweeps = true;
      for (int trial = 0; trial < 30 && sweeps; ++trial) {
        Graph g = sample_gnN(5, 1 + trial % 5, mix_seed(opt.seed, 5000 + trial));
        HasseDiagram h = hasse(g);
        const int e = h.edge_count();
        for (uint64_t code = 0; code < (uint64_t{1} << e); ++code) {
          OrientationPrescription w;
          w.signs.resize(e);
          for (int i = 0; i < e; ++i) w.signs[i] = (code >> i) & 1 ? -1 : 1;
          if (is_flow(h, w) != is_matching(h, w)) sweeps = false;
        }
      }
      check("deep_random.flow_matching_sweep", sweeps);
    });
  }

  return results;
}

}  // namespace morseflow
