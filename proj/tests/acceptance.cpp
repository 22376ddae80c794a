// Acceptance gate: twelve numbered end-to-end checks plus the threshold-scan
// check, one pass/fail line each, with per-check time budgets.
//
//   acceptance            runs everything
//   acceptance 7          runs check 7 only
//   acceptance randlab    runs the threshold-scan check only
//
// Exit code: number of failing checks.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iterator>
#include <string>
#include <vector>

#include "morseflow/complex.hpp"
#include "morseflow/families.hpp"
#include "morseflow/flow.hpp"
#include "morseflow/oracle.hpp"
#include "morseflow/poly.hpp"
#include "morseflow/randlab.hpp"
#include "morseflow/rational.hpp"
#include "morseflow/rng.hpp"

using namespace morseflow;

namespace {

const std::vector<int> kNoProfiles;  // census subset: track counts only

Rational census_p(const Graph& g) {
  return brute_force_census(g, kNoProfiles).flow_probability();
}

std::string rstr(const Rational& p) {
  return p.get_num().get_str() + "/" + p.get_den().get_str();
}

// ---------------------------------------------------------------- 1..6

bool c1_single_edge(std::string& d) {
  const Rational expect = make_rational(3, 4);
  if (path_prob(1) != expect) { d = "closed form gives " + rstr(path_prob(1)); return false; }
  if (prob(path_graph(1)) != expect) { d = "polynomial engine disagrees"; return false; }
  if (census_p(path_graph(1)) != expect) { d = "brute force disagrees"; return false; }
  return true;
}

bool c2_path_series(std::string& d) {
  const long nums[] = {3, 1, 21, 55, 9, 377, 987, 323};
  const long dens[] = {4, 2, 64, 256, 64, 4096, 16384, 8192};
  std::vector<Rational> s = path_series(8);
  for (int i = 0; i < 8; ++i) {
    if (s[i] != make_rational(nums[i], dens[i])) {
      d = "p_" + std::to_string(i + 1) + " = " + rstr(s[i]);
      return false;
    }
    if (path_prob(i + 1) != s[i]) { d = "transfer matrix splits from the recurrence"; return false; }
  }
  for (int n = 1; n <= 6; ++n) {
    if (census_p(path_graph(n)) != s[n - 1]) {
      d = "brute force disagrees at n = " + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool c3_stars(std::string& d) {
  for (int n = 1; n <= 10; ++n) {
    const Rational expect = make_rational(n + 2, 1L << (n + 1));
    if (star_prob(n) != expect || prob(star_graph(n)) != expect) {
      d = "n = " + std::to_string(n) + ": " + rstr(star_prob(n)) + " vs " + rstr(expect);
      return false;
    }
    if (n <= 6 && census_p(star_graph(n)) != expect) {
      d = "brute force disagrees at n = " + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool c4_cycles(std::string& d) {
  struct Pin { int n; long num, den; } pins[] = {{3, 9, 32}, {4, 47, 256}};
  for (auto [n, num, den] : pins) {
    const Rational expect = make_rational(num, den);
    if (cycle_prob(n) != expect) { d = "recurrence fails at n = " + std::to_string(n); return false; }
    if (prob(cycle_graph(n)) != expect) { d = "polynomial disagrees at n = " + std::to_string(n); return false; }
    if (census_p(cycle_graph(n)) != expect) { d = "brute force disagrees at n = " + std::to_string(n); return false; }
  }
  if (cycle_prob(5) != make_rational(123, 1024)) { d = "recurrence fails at n = 5"; return false; }
  if (census_p(cycle_graph(5)) != make_rational(123, 1024)) { d = "brute force disagrees at n = 5"; return false; }
  return true;
}

bool c5_complete(std::string& d) {
  if (complete_coeffs(3).c != std::vector<mpz_class>{1, 2, 3, 2}) {
    d = "weighted counts at n = 3 are off";
    return false;
  }
  if (complete_prob(3) != make_rational(9, 32) || complete_prob(3) != cycle_prob(3)) {
    d = "P(K_3) = " + rstr(complete_prob(3));
    return false;
  }
  if (complete_prob(4) != make_rational(163, 4096)) { d = "P(K_4) = " + rstr(complete_prob(4)); return false; }
  if (census_p(complete_graph(4)) != make_rational(163, 4096)) { d = "K_4 census disagrees"; return false; }
  for (int n = 3; n <= 12; ++n) {
    auto [lo, hi] = complete_bounds(n);
    const Rational p = complete_prob(n);
    if (p < lo || hi < p) { d = "sandwich fails at n = " + std::to_string(n); return false; }
  }
  return true;
}

void arm_multisets(std::vector<int>& parts, int budget, int max_part,
                   std::vector<std::vector<int>>& out) {
  if (parts.size() >= 3) out.push_back(parts);
  for (int next = std::min(budget, max_part); next >= 1; --next) {
    parts.push_back(next);
    arm_multisets(parts, budget - next, next, out);
    parts.pop_back();
  }
}

bool c6_octopus_dandelion(std::string& d) {
  std::vector<std::vector<int>> shapes;
  std::vector<int> parts;
  arm_multisets(parts, 6, 6, shapes);
  int instances = 0;
  for (const std::vector<int>& arms : shapes) {
    const std::vector<long> arms_l(arms.begin(), arms.end());
    if (octopus_prob(arms_l) != census_p(octopus_graph(arms))) {
      d = "octopus with " + std::to_string(arms.size()) + " arms disagrees with brute force";
      return false;
    }
    ++instances;
  }
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; n + m <= 6; ++m) {
      if (dandelion_prob(n, m) != census_p(dandelion_graph(n, m))) {
        d = "dandelion (" + std::to_string(n) + ", " + std::to_string(m) + ") disagrees";
        return false;
      }
      ++instances;
    }
  }
  for (int k = 3; k <= 8; ++k) {
    if (octopus_prob(std::vector<long>(k, 1)) != star_prob(k)) {
      d = "unit arms miss the star value at k = " + std::to_string(k);
      return false;
    }
  }
  for (int m = 1; m <= 8; ++m) {
    if (dandelion_prob(1, m) != star_prob(m + 1)) {
      d = "length-one dandelion misses the star value at m = " + std::to_string(m);
      return false;
    }
  }
  d = std::to_string(instances) + " instances against brute force";
  return true;
}

// ---------------------------------------------------------------- 7..9

bool c7_global_bounds(std::string& d) {
  Rng pick(mix_seed(20260822, 7));
  int equality_seen = 0, strict_seen = 0;
  for (int i = 0; i < 500; ++i) {
    Graph g;
    if (i % 25 == 0) {
      // guaranteed disjoint-edge instances
      const int m = static_cast<int>(i / 25 % 5) + 1;
      std::vector<std::pair<int, int>> edges;
      for (int j = 0; j < m; ++j) edges.push_back({2 * j, 2 * j + 1});
      g = make_graph(2 * m, std::move(edges));
    } else {
      const int n = 2 + static_cast<int>(pick.below(11));
      const long long cap = std::min<long long>(10, n * (n - 1) / 2);
      g = sample_gnN(n, static_cast<long long>(pick.below(cap + 1)), mix_seed(20260822, 7, i));
    }
    const unsigned long N = g.edge_count();
    const Rational p = prob(g);
    const Rational lo = rational_pow(make_rational(1, 4), N);
    const Rational hi = rational_pow(make_rational(3, 4), N);
    if (p < lo || hi < p) { d = "bounds fail on instance " + std::to_string(i); return false; }
    std::vector<int> degree(g.n_vertices, 0);
    for (auto [u, v] : g.edges) ++degree[u], ++degree[v];
    bool disjoint = true;
    for (int deg : degree) disjoint = disjoint && deg <= 1;
    if (disjoint != (p == hi)) {
      d = "upper equality should hold exactly on disjoint edges (instance " + std::to_string(i) + ")";
      return false;
    }
    ++(disjoint ? equality_seen : strict_seen);
  }
  if (equality_seen < 5 || strict_seen < 100) { d = "sample mix too lopsided"; return false; }
  d = "500 graphs, " + std::to_string(equality_seen) + " with equality";
  return true;
}

bool c8_rules(std::string& d) {
  Rng pick(mix_seed(20260822, 8));
  int instances = 0;

  for (int i = 0; i < 40; ++i) {
    const int na = 2 + static_cast<int>(pick.below(5));
    const int nb = 2 + static_cast<int>(pick.below(5));
    Graph a = sample_gnN(na, static_cast<long long>(pick.below(std::min(7, na * (na - 1) / 2 + 1))),
                         mix_seed(20260822, 80, i));
    Graph b = sample_gnN(nb, static_cast<long long>(pick.below(std::min(7, nb * (nb - 1) / 2 + 1))),
                         mix_seed(20260822, 81, i));
    if (prob(disjoint_union(a, b)) != prob(a) * prob(b)) {
      d = "product rule fails on pair " + std::to_string(i);
      return false;
    }
    ++instances;
  }

  for (int n = 3; n <= 8; ++n) {
    std::vector<std::vector<int>> classes{{0, n}};
    for (int v = 1; v < n; ++v) classes.push_back({v});
    if (quotient_prob(path_graph(n), classes) != cycle_prob(n)) {
      d = "closing the path misses the cycle at n = " + std::to_string(n);
      return false;
    }
    ++instances;
  }

  int merged = 0;
  for (int attempt = 0; attempt < 600 && merged < 30; ++attempt) {
    const int n = 5 + static_cast<int>(pick.below(4));
    Graph g = sample_gnN(n, 3 + static_cast<long long>(pick.below(5)), mix_seed(20260822, 82, attempt));
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges) adj[u] |= 1u << v, adj[v] |= 1u << u;
    std::vector<std::pair<int, int>> mergeable;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!(adj[u] >> v & 1) && !(adj[u] & adj[v])) mergeable.push_back({u, v});
    if (mergeable.empty()) continue;
    auto [u, v] = mergeable[pick.below(mergeable.size())];
    std::vector<std::vector<int>> classes{{u, v}};
    for (int w = 0; w < n; ++w)
      if (w != u && w != v) classes.push_back({w});
    QuotientResult q = quotient(g, classes);
    if (prob(q.graph) != quotient_prob(g, classes)) {
      d = "vertex identification disagrees with the substituted polynomial";
      return false;
    }
    ++merged;
    ++instances;
  }
  if (merged < 30) { d = "could not build 30 simple identifications"; return false; }

  for (int i = 0; i < 30; ++i) {
    const int n = 2 + static_cast<int>(pick.below(4));
    Graph g = sample_gnN(n, static_cast<long long>(pick.below(std::min(7, n * (n - 1) / 2 + 1))),
                         mix_seed(20260822, 83, i));
    AnomalyConstraint c;
    for (int v = 0; v < n; ++v) c.vertices.push_back(v);
    c.values.assign(n, 0);
    Rational sum = 0;
    for (uint32_t pattern = 0; pattern < (1u << n); ++pattern) {
      for (int v = 0; v < n; ++v) c.values[v] = pattern >> v & 1;
      sum += profile_prob(g, c);
    }
    if (sum != prob(g)) { d = "profile sum misses the total on instance " + std::to_string(i); return false; }
    ++instances;
  }

  d = std::to_string(instances) + " instances";
  return instances >= 100;
}

// Every graph with at most 5 edges, up to isomorphism and isolated vertices:
// all edge subsets of K_6 (a connected graph with <= 5 edges has <= 6
// vertices), together with every disjoint union of connected pieces of <= 4
// edges (covering the unions that need more than 6 vertices).
std::vector<Graph> small_graph_family() {
  std::vector<Graph> out;
  std::vector<std::pair<int, int>> k6;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) k6.push_back({i, j});
  for (uint32_t mask = 0; mask < (1u << 15); ++mask) {
    if (__builtin_popcount(mask) > 5) continue;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < 15; ++e)
      if (mask >> e & 1) edges.push_back(k6[e]);
    out.push_back(make_graph(6, std::move(edges)));
  }

  const std::vector<Graph> pieces = {
      path_graph(1), path_graph(2),
      path_graph(3), star_graph(3), cycle_graph(3),
      path_graph(4), star_graph(4), octopus_graph({2, 1, 1}), cycle_graph(4),
      make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})};
  struct Walk {
    const std::vector<Graph>& pieces;
    std::vector<Graph>& out;
    void go(const Graph& acc, int depth, size_t from, int budget) {
      if (depth >= 2) out.push_back(acc);
      for (size_t i = from; i < pieces.size(); ++i)
        if (pieces[i].edge_count() <= budget)
          go(disjoint_union(acc, pieces[i]), depth + 1, i, budget - pieces[i].edge_count());
    }
  } walk{pieces, out};
  walk.go(Graph{}, 0, 0, 5);

  // isolated vertices change nothing: one representative
  out.push_back(make_graph(5, {{1, 3}, {3, 4}}));
  return out;
}

bool c9_flow_engine(std::string& d) {
  uint64_t prescriptions = 0, flows = 0, acyclic_flows = 0;
  const std::vector<Graph> family = small_graph_family();
  for (size_t gi = 0; gi < family.size(); ++gi) {
    const Graph& g = family[gi];
    const HasseDiagram h = hasse(g);
    const int m = g.edge_count();
    OrientationPrescription w;
    w.signs.resize(2 * m);
    const uint64_t total = uint64_t{1} << (2 * m);
    for (uint64_t code = 0; code < total; ++code) {
      for (int j = 0; j < m; ++j) {
        w.signs[2 * j] = (code >> (2 * j) & 1) ? -1 : 1;
        w.signs[2 * j + 1] = (code >> (2 * j + 1) & 1) ? -1 : 1;
      }
      ++prescriptions;
      const bool flow = is_flow(h, w);
      if (flow != is_matching(h, w)) {
        d = "flow and matching split on graph " + std::to_string(gi);
        return false;
      }
      if (!flow) continue;
      ++flows;
      DeformResult r = deform_to_acyclic(h, w);
      if (!is_flow(h, r.prescription) || !is_acyclic(h, r.prescription)) {
        d = "deformation left a cyclic or non-flow state on graph " + std::to_string(gi);
        return false;
      }
      if (r.prescription.sign_count() + static_cast<int>(r.flipped.size()) != w.sign_count()) {
        d = "each flip must retire exactly one minus sign (graph " + std::to_string(gi) + ")";
        return false;
      }
      if (!is_acyclic(h, w)) continue;
      ++acyclic_flows;
      if (!r.flipped.empty()) {
        d = "deformation moved an already acyclic flow on graph " + std::to_string(gi);
        return false;
      }
      MorseFunction f = morse_from_flow(h, w);
      MorsePrescription back = flow_from_morse(h, f.values);
      if (!back.morse || !(back.prescription == w)) {
        d = "Morse round trip broke on graph " + std::to_string(gi);
        return false;
      }
    }
  }
  d = std::to_string(family.size()) + " graphs, " + std::to_string(prescriptions) +
      " prescriptions, " + std::to_string(flows) + " flows, " + std::to_string(acyclic_flows) +
      " acyclic";
  return true;
}

// ---------------------------------------------------------------- 10..12

std::string g6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

bool c10_asymptotics(std::string& d) {
  const GrowthConstants gc = growth_constants();
  std::vector<Rational> s = path_series(51);
  const double ratio = rational_to_double(s[50] / s[49]);
  if (std::abs(ratio - gc.lambda_plus) >= 1e-12) {
    d = "p_51 / p_50 = " + g6(ratio) + " is not within 1e-12 of the growth rate";
    return false;
  }
  const double h_path = h_invariant(path_prob(200), 200);
  if (std::abs(h_path - gc.log_r) >= 0.01) {
    d = "h(L_200) = " + g6(h_path) + " strays from log r = " + g6(gc.log_r);
    return false;
  }
  const double h_star = h_invariant(star_prob(60), 60);
  if (std::abs(h_star - gc.log_half) >= 0.06) {
    d = "h(S_60) = " + g6(h_star) + " strays from log(1/2) = " + g6(gc.log_half);
    return false;
  }
  const double h_complete = h_invariant(complete_prob(12), 66);
  if (std::abs(h_complete - gc.log_quarter) >= 0.12) {
    d = "h(K_12) = " + g6(h_complete) + " sits " + g6(std::abs(h_complete - gc.log_quarter)) +
        " from log(1/4) = " + g6(gc.log_quarter) + ", outside the 0.12 window";
    return false;
  }
  return true;
}

bool c11_density(std::string& d) {
  const GrowthConstants gc = growth_constants();
  const double lo = gc.log_quarter + 0.05, hi = gc.log_three_quarters - 0.05;
  const int ladder[] = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 20, 50, 100, 150, 200};
  std::vector<Rational> cache(std::size(ladder));
  std::vector<bool> have(std::size(ladder), false);
  auto complete_p = [&](size_t i) -> const Rational& {
    if (!have[i]) {
      cache[i] = complete_prob(ladder[i]);
      have[i] = true;
    }
    return cache[i];
  };

  double worst = 0.0;
  int biggest_n = 0;
  long long biggest_m = 0;
  for (int point = 0; point < 20; ++point) {
    const double x = lo + (hi - lo) * point / 19.0;
    bool hit = false;
    for (size_t i = 0; i < std::size(ladder) && !hit; ++i) {
      const int n = ladder[i];
      const Rational& pk = complete_p(i);
      const long long N = static_cast<long long>(n) * (n - 1) / 2;
      const double L = rational_log(pk);
      const double u = gc.log_three_quarters;
      const long long base =
          std::max<long long>(0, std::llround((x * static_cast<double>(N) - L) / (u - x)));
      for (long long dm = -1; dm <= 1 && !hit; ++dm) {
        const long long m = base + dm;
        if (m < 0) continue;
        const Rational p = pk * rational_pow(make_rational(3, 4), static_cast<unsigned long>(m));
        const double err = std::abs(h_invariant(p, N + m) - x);
        if (err <= 0.02) {
          hit = true;
          worst = std::max(worst, err);
          if (n > biggest_n) { biggest_n = n; biggest_m = m; }
        }
      }
    }
    if (!hit) {
      d = "no witness within 0.02 of target " + g6(x);
      return false;
    }
  }
  d = "worst error " + g6(worst) + "; deepest witness K_" + std::to_string(biggest_n) + " plus " +
      std::to_string(biggest_m) + " disjoint edges";
  return true;
}

bool c12_calibration(std::string& d) {
  const struct { const char* name; Graph g; } targets[] = {
      {"L_1", path_graph(1)}, {"C_4", cycle_graph(4)}, {"S_3", star_graph(3)}};
  for (size_t t = 0; t < 3; ++t) {
    const double exact = rational_to_double(prob(targets[t].g));
    int covered = 0;
    for (int i = 0; i < 100; ++i) {
      McEstimate e = mc_prob(targets[t].g, 1000000, mix_seed(20260822, t, i), 4);
      if (std::abs(e.estimate - exact) <= 4 * e.ci_half_width) ++covered;
    }
    if (covered < 99) {
      d = std::string(targets[t].name) + ": only " + std::to_string(covered) +
          " of 100 seeds inside 4 half-widths";
      return false;
    }
  }
  return true;
}

bool randlab_scan(std::string& d) {
  std::vector<long long> grid;
  for (long long N = 2; N <= 16; N += 2) grid.push_back(N);
  ThresholdScan a = threshold_scan(-0.6, 8, grid, 200, 77, HEngine::Poly);
  ThresholdScan b = threshold_scan(-0.6, 8, grid, 200, 77, HEngine::Poly);
  for (size_t i = 0; i < grid.size(); ++i) {
    if (a.cells[i].hits != b.cells[i].hits) { d = "rerun with the same seed diverged"; return false; }
  }
  // denser graphs push h down, so the empirical curve may only rise (up to noise)
  const double z = 1.959963984540054;
  for (size_t i = 0; i < grid.size(); ++i) {
    for (size_t j = i + 1; j < grid.size(); ++j) {
      const double se_i = a.cells[i].ci_half_width / z;
      const double se_j = a.cells[j].ci_half_width / z;
      const double drop = a.cells[i].fraction - a.cells[j].fraction;
      if (drop > 3.0 * std::sqrt(se_i * se_i + se_j * se_j)) {
        d = "fraction drops from N = " + std::to_string(grid[i]) + " to N = " +
            std::to_string(grid[j]) + " beyond noise";
        return false;
      }
    }
  }
  std::string curve = "fractions";
  for (const ThresholdCell& c : a.cells) curve += " " + g6(c.fraction);
  d = curve;
  return true;
}

struct Criterion {
  int id;
  const char* label;
  double budget_s;
  bool (*body)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "single edge agrees across engines", 0.001, c1_single_edge},
    {2, "path series by recurrence, transfer matrix, brute force", 5, c2_path_series},
    {3, "star closed form", 5, c3_stars},
    {4, "cycle values", 5, c4_cycles},
    {5, "complete graphs and their sandwich bounds", 10, c5_complete},
    {6, "octopus and dandelion closed forms", 10, c6_octopus_dandelion},
    {7, "global probability bounds on random graphs", 60, c7_global_bounds},
    {8, "product, quotient and profile-sum rules", 60, c8_rules},
    {9, "flow engine exhaustive on small graphs", 120, c9_flow_engine},
    {10, "asymptotic constants from exact rationals", 10, c10_asymptotics},
    {11, "entropy targets hit by constructive witnesses", 30, c11_density},
    {12, "Monte Carlo calibration over 100 seeds", 120, c12_calibration},
};

int run(const Criterion& c) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = c.body(detail);
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && sec > c.budget_s) {
    ok = false;
    detail = "over budget: " + std::to_string(sec) + " s, allowed " + std::to_string(c.budget_s);
  }
  std::printf("criterion %02d: %s  (%.3f s)  %s\n", c.id, ok ? "PASS" : "FAIL", sec, c.label);
  if (!detail.empty()) std::printf("              %s\n", detail.c_str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  // touch the main code paths once so the first timed check pays no setup cost
  (void)prob(path_graph(1));
  (void)census_p(path_graph(1));
  (void)path_prob(1);

  if (argc > 1 && std::strcmp(argv[1], "randlab") == 0) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    const bool ok = randlab_scan(detail);
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("randlab     : %s  (%.3f s)  threshold scan determinism and direction\n",
                ok ? "PASS" : "FAIL", sec);
    if (!detail.empty()) std::printf("              %s\n", detail.c_str());
    return ok ? 0 : 1;
  }

  int selected = 0;
  if (argc > 1) {
    selected = std::atoi(argv[1]);
    if (selected < 1 || selected > 12) {
      std::fprintf(stderr, "usage: acceptance [1..12|randlab]\n");
      return 2;
    }
  }

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (selected && c.id != selected) continue;
    failures += run(c);
  }
  if (!selected) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    const bool ok = randlab_scan(detail);
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("randlab     : %s  (%.3f s)  threshold scan determinism and direction\n",
                ok ? "PASS" : "FAIL", sec);
    if (!detail.empty()) std::printf("              %s\n", detail.c_str());
    failures += ok ? 0 : 1;
  }
  return failures;
}
