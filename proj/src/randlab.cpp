#include "morseflow/randlab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "morseflow/errors.hpp"
#include "morseflow/families.hpp"
#include "morseflow/oracle.hpp"
#include "morseflow/poly.hpp"
#include "morseflow/rng.hpp"

namespace morseflow {

namespace {

constexpr double kZ95 = 1.959963984540054;

void fill_interval(McEstimate& e) {
  const double n = static_cast<double>(e.samples);
  const double p = static_cast<double>(e.hits) / n;
  e.estimate = p;
  if (e.hits == 0 || e.hits == e.samples) {
    // Wilson interval; the normal approximation collapses at the boundary.
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double hw = kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    e.ci_half_width = hw;
    e.ci_low = std::max(0.0, center - hw);
    e.ci_high = std::min(1.0, center + hw);
  } else {
    const double hw = kZ95 * std::sqrt(p * (1.0 - p) / n);
    e.ci_half_width = hw;
    e.ci_low = std::max(0.0, p - hw);
    e.ci_high = std::min(1.0, p + hw);
  }
}

// Hits in samples [lo, hi) of the chunked stream. Each sample consumes two
// sign bits per edge from successive engine words, low edge index in low bits;
// a rejected sample skips its remaining words.
uint64_t mc_range(const Graph& g, uint64_t seed, uint64_t chunk_size, uint64_t lo, uint64_t hi,
                  std::vector<uint64_t>& stamp) {
  const int m = g.edge_count();
  uint64_t hits = 0;
  uint64_t chunk = lo / chunk_size;
  Rng rng = Rng::substream(seed, chunk);
  for (uint64_t i = lo; i < hi; ++i) {
    if (i / chunk_size != chunk) {
      chunk = i / chunk_size;
      rng = Rng::substream(seed, chunk);
    }
    bool flow = true;
    uint64_t word = 0;
    int avail = 0;
    for (int j = 0; j < m; ++j) {
      if (avail == 0) {
        word = rng.word();
        avail = 32;
      }
      const uint64_t two = word & 3;
      word >>= 2;
      --avail;
      if (two == 0) continue;
      if (two == 3) {
        flow = false;
        break;
      }
      const int v = two == 1 ? g.edges[j].first : g.edges[j].second;
      if (stamp[v] == i) {
        flow = false;
        break;
      }
      stamp[v] = i;
    }
    if (flow) ++hits;
  }
  return hits;
}

}  // namespace

McEstimate mc_prob(const Graph& g, uint64_t samples, uint64_t seed, int jobs) {
  if (samples == 0) throw InputError("Monte Carlo needs at least one sample");
  McEstimate e;
  e.samples = samples;
  e.seed = seed;
  const uint64_t chunk_size = uint64_t{1} << 16;
  jobs = std::max(1, jobs);
  if (jobs == 1 || samples < 2 * chunk_size) {
    std::vector<uint64_t> stamp(g.n_vertices, UINT64_MAX);
    e.hits = mc_range(g, seed, chunk_size, 0, samples, stamp);
  } else {
    // Whole chunks are the unit of work, so the partition cannot split a
    // substream and the hit count is independent of the job count.
    const uint64_t n_chunks = (samples + chunk_size - 1) / chunk_size;
    std::atomic<uint64_t> next{0};
    std::vector<uint64_t> partial(jobs, 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        std::vector<uint64_t> stamp(g.n_vertices, UINT64_MAX);
        for (uint64_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) {
          const uint64_t lo = c * chunk_size;
          partial[w] += mc_range(g, seed, chunk_size, lo, std::min(lo + chunk_size, samples), stamp);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (uint64_t p : partial) e.hits += p;
  }
  fill_interval(e);
  return e;
}

HEstimate mc_h(const McEstimate& e, long long edge_count) {
  if (edge_count < 0) throw InputError("negative edge count");
  if (edge_count == 0) return {0.0, false};
  if (e.hits == 0) {
    // No flow seen: only P <= ci_high is known, so only an upper bound on h.
    return {std::log(e.ci_high) / static_cast<double>(edge_count), true};
  }
  return {std::log(e.estimate) / static_cast<double>(edge_count), false};
}

Graph sample_gnp(int n, double p, uint64_t seed) {
  if (n < 0) throw InputError("negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability outside [0, 1]");
  Rng rng = Rng::substream(seed, 0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.real01() < p) edges.push_back({u, v});
  return make_graph(n, std::move(edges));
}

Graph sample_gnN(int n, long long edge_target, uint64_t seed) {
  if (n < 0) throw InputError("negative vertex count");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (edge_target < 0 || edge_target > max_edges)
    throw InputError("edge target outside [0, n(n-1)/2]");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(max_edges);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  Rng rng = Rng::substream(seed, 0);
  for (long long i = 0; i < edge_target; ++i) {
    const uint64_t j = i + rng.below(pairs.size() - i);
    std::swap(pairs[i], pairs[j]);
  }
  pairs.resize(edge_target);
  return make_graph(n, std::move(pairs));
}

ThresholdScan threshold_scan(double x, int n, const std::vector<long long>& edge_grid,
                             uint64_t samples_per_cell, uint64_t seed,
                             HEngine engine, uint64_t mc_samples) {
  const GrowthConstants gc = growth_constants();
  if (!(x > gc.log_quarter && x < gc.log_three_quarters))
    throw InputError("threshold x must lie strictly between log(1/4) and log(3/4)");
  if (n < 2) throw InputError("threshold scan needs n >= 2");
  if (samples_per_cell == 0) throw InputError("threshold scan needs samples");

  ThresholdScan scan;
  scan.x = x;
  scan.n = n;
  scan.seed = seed;
  for (size_t ci = 0; ci < edge_grid.size(); ++ci) {
    ThresholdCell cell;
    cell.edge_target = edge_grid[ci];
    cell.samples = samples_per_cell;
    for (uint64_t s = 0; s < samples_per_cell; ++s) {
      const uint64_t gseed = mix_seed(seed, ci, s);
      Graph g = sample_gnN(n, edge_grid[ci], gseed);
      const long long m = g.edge_count();
      HEngine pick = engine;
      if (pick == HEngine::Auto) {
        if (n <= 20)
          pick = HEngine::Poly;
        else if (m <= 12)
          pick = HEngine::Brute;
        else
          pick = HEngine::Mc;
      }
      bool counted = false;
      switch (pick) {
        case HEngine::Poly:
          counted = h_invariant(prob(g), m) <= x;
          break;
        case HEngine::Brute: {
          // Empty subset: counts only, no per-vertex profile tally.
          FlowCensus c = brute_force_census(g, std::vector<int>{});
          counted = h_invariant(c.flow_probability(), m) <= x;
          break;
        }
        case HEngine::Mc: {
          McEstimate e = mc_prob(g, mc_samples, mix_seed(gseed, 1));
          HEstimate he = mc_h(e, m);
          // An upper bound below x still certifies h <= x; a bound above x
          // decides nothing and is counted as a miss.
          counted = he.value <= x;
          break;
        }
        default:
          throw InputError("unresolved engine");
      }
      if (counted) ++cell.hits;
    }
    const double frac = static_cast<double>(cell.hits) / static_cast<double>(cell.samples);
    cell.fraction = frac;
    cell.ci_half_width = kZ95 * std::sqrt(frac * (1.0 - frac) / static_cast<double>(cell.samples));
    scan.cells.push_back(cell);
  }
  return scan;
}

Rational tree_prob(const Graph& g) {
  if (g.edge_count() != g.n_vertices - g.component_count())
    throw InputError("tree probability needs a forest");
  std::vector<std::vector<int>> adj(g.n_vertices);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  const Rational quarter = make_rational(1, 4);
  std::vector<Rational> q0(g.n_vertices), q1(g.n_vertices);
  std::vector<char> visited(g.n_vertices, 0);
  Rational p = 1;
  for (int root = 0; root < g.n_vertices; ++root) {
    if (visited[root]) continue;
    // Post-order over the component: children fold into the parent through
    // the two boundary states of the connecting edge.
    std::vector<std::pair<int, int>> stack{{root, -1}};
    std::vector<std::pair<int, int>> order;
    visited[root] = 1;
    while (!stack.empty()) {
      auto [v, parent] = stack.back();
      stack.pop_back();
      order.push_back({v, parent});
      for (int w : adj[v]) {
        if (w == parent) continue;
        if (visited[w]) throw InputError("tree probability needs a forest");
        visited[w] = 1;
        stack.push_back({w, v});
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [v, parent] = *it;
      q0[v] = 1;
      q1[v] = 0;
      for (int w : adj[v]) {
        if (w == parent) continue;
        const Rational alpha = quarter * (2 * q0[w] + q1[w]);
        const Rational beta = quarter * (q0[w] + q1[w]);
        q1[v] = q1[v] * alpha + q0[v] * beta;
        q0[v] = q0[v] * alpha;
      }
    }
    p *= q0[root] + q1[root];
  }
  return p;
}

namespace {

// Decodes a linear sequence over {0..m-1}^(m-2) to its labeled tree.
std::vector<std::pair<int, int>> sequence_tree(const std::vector<int>& seq, int m) {
  std::vector<int> degree(m, 1);
  for (int s : seq) ++degree[s];
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m - 1);
  for (int s : seq) {
    edges.push_back({leaf, s});
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, m - 1});
  return edges;
}

}  // namespace

TreeExtremes tree_extremes(int n, bool exhaustive, uint64_t samples, uint64_t seed) {
  if (n < 1) throw InputError("tree extremes need n >= 1");
  const int m = n + 1;
  TreeExtremes r;
  r.n = n;
  bool first = true;
  auto consider = [&](const std::vector<int>& seq) {
    Graph t = make_graph(m, sequence_tree(seq, m));
    Rational p = tree_prob(t);
    if (first || p < r.p_min) {
      r.p_min = p;
      r.argmin = t;
    }
    if (first || p > r.p_max) {
      r.p_max = p;
      r.argmax = t;
    }
    first = false;
    ++r.trees_seen;
  };
  if (exhaustive) {
    if (n > 8) throw SizeError("exhaustive tree scan limited to n <= 8");
    std::vector<int> seq(m - 2, 0);
    while (true) {
      consider(seq);
      int pos = static_cast<int>(seq.size()) - 1;
      while (pos >= 0 && seq[pos] == m - 1) seq[pos--] = 0;
      if (pos < 0) break;
      ++seq[pos];
    }
  } else {
    if (samples == 0) throw InputError("sampled tree scan needs samples");
    Rng rng = Rng::substream(seed, 0);
    std::vector<int> seq(m - 2);
    for (uint64_t i = 0; i < samples; ++i) {
      for (int& s : seq) s = static_cast<int>(rng.below(m));
      consider(seq);
    }
  }
  r.h_min = h_invariant(r.p_min, n);
  r.h_max = h_invariant(r.p_max, n);
  return r;
}

ConvexityReport convexity_check(const Graph& a, const Graph& b) {
  if (a.edges.empty() || b.edges.empty())
    throw InputError("convexity check needs graphs with edges");
  ConvexityReport r;
  r.p_left = prob(a);
  r.p_right = prob(b);
  r.p_union = prob(disjoint_union(a, b));
  const long long na = a.edge_count(), nb = b.edge_count();
  r.h_left = h_invariant(r.p_left, na);
  r.h_right = h_invariant(r.p_right, nb);
  r.h_union = h_invariant(r.p_union, na + nb);
  r.h_mix = (static_cast<double>(na) * r.h_left + static_cast<double>(nb) * r.h_right) /
            static_cast<double>(na + nb);
  r.product_exact = r.p_union == r.p_left * r.p_right;
  r.mix_close = std::abs(r.h_union - r.h_mix) < 1e-10;
  return r;
}

}  // namespace morseflow
