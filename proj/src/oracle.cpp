#include "morseflow/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "morseflow/errors.hpp"

// Independent of the flow engine on purpose: the census re-tests the
// definitions from scratch (matching via stamps, acyclicity via a hand-rolled
// DFS over the reoriented incidences), so agreement with the other engines is
// evidence, not circularity.

namespace morseflow {

Rational FlowCensus::flow_probability() const {
  if (total == 0) throw InputError("empty census");
  return make_rational(mpz_class(static_cast<unsigned long>(flows)),
                       mpz_class(static_cast<unsigned long>(total)));
}

Rational FlowCensus::profile_probability(uint64_t pattern) const {
  if (total == 0) throw InputError("empty census");
  auto it = std::lower_bound(profiles.begin(), profiles.end(),
                             std::make_pair(pattern, uint64_t{0}),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  uint64_t count = (it != profiles.end() && it->first == pattern) ? it->second : 0;
  return make_rational(mpz_class(static_cast<unsigned long>(count)),
                       mpz_class(static_cast<unsigned long>(total)));
}

namespace {

struct Tally {
  uint64_t flows = 0;
  uint64_t acyclic = 0;
  std::map<uint64_t, uint64_t> profiles;

  void merge(const Tally& o) {
    flows += o.flows;
    acyclic += o.acyclic;
    for (auto [k, v] : o.profiles) profiles[k] += v;
  }
};

// Scratch for one worker; sized once per graph.
struct GraphScratch {
  std::vector<uint64_t> stamp;                       // per vertex, marks the -1 owner
  std::vector<int8_t> color;                         // DFS colors over n + m nodes
  std::vector<std::pair<int, size_t>> stack;         // (node, next out-candidate)
  std::vector<std::vector<std::pair<int, int>>> inc; // per vertex: (edge, bit position)
};

bool graph_code_is_flow(const Graph& g, uint64_t code, std::vector<uint64_t>& stamp) {
  const int m = g.edge_count();
  for (int j = 0; j < m; ++j) {
    uint64_t two = (code >> (2 * j)) & 3;
    if (two == 0) continue;
    if (two == 3) return false;  // both incidences of the edge get -1
    int v = two == 1 ? g.edges[j].first : g.edges[j].second;
    if (stamp[v] == code) return false;  // second -1 at this vertex
    stamp[v] = code;
  }
  return true;
}

// DFS over the reoriented incidence structure: vertex -> barycenter along a
// -1 incidence, barycenter -> endpoint along a +1 incidence.
bool graph_code_is_acyclic(const Graph& g, uint64_t code, GraphScratch& s) {
  const int n = g.n_vertices, m = g.edge_count();
  const int nodes = n + m;
  std::fill(s.color.begin(), s.color.end(), int8_t{0});
  for (int start = 0; start < nodes; ++start) {
    if (s.color[start]) continue;
    s.stack.clear();
    s.stack.push_back({start, 0});
    s.color[start] = 1;
    while (!s.stack.empty()) {
      auto& [u, next] = s.stack.back();
      int to = -1;
      if (u < n) {
        const auto& iv = s.inc[u];
        while (next < iv.size()) {
          auto [j, bitpos] = iv[next++];
          if ((code >> bitpos) & 1) {
            to = n + j;
            break;
          }
        }
      } else {
        const int j = u - n;
        while (next < 2) {
          const int bitpos = 2 * j + static_cast<int>(next);
          const int v = next == 0 ? g.edges[j].first : g.edges[j].second;
          ++next;
          if (!((code >> bitpos) & 1)) {
            to = v;
            break;
          }
        }
      }
      if (to == -1) {
        s.color[u] = 2;
        s.stack.pop_back();
      } else if (s.color[to] == 0) {
        s.color[to] = 1;
        s.stack.push_back({to, 0});
      } else if (s.color[to] == 1) {
        return false;
      }
    }
  }
  return true;
}

void graph_census_range(const Graph& g, const std::vector<int>& subset,
                        uint64_t lo, uint64_t hi, GraphScratch& s, Tally& t) {
  for (uint64_t code = lo; code < hi; ++code) {
    if (!graph_code_is_flow(g, code, s.stamp)) continue;
    ++t.flows;
    uint64_t pattern = 0;
    for (size_t i = 0; i < subset.size(); ++i)
      if (s.stamp[subset[i]] == code) pattern |= uint64_t{1} << i;
    ++t.profiles[pattern];
    if (graph_code_is_acyclic(g, code, s)) ++t.acyclic;
  }
}

}  // namespace

FlowCensus brute_force_census(const Graph& g, const std::optional<std::vector<int>>& subset,
                              uint64_t limit, int jobs) {
  const int m = g.edge_count();
  if (m > 31 || (uint64_t{1} << (2 * m)) > limit)
    throw SizeError("4^edges exceeds the enumeration limit; use the polynomial engine or Monte Carlo");

  std::vector<int> sub;
  if (subset) {
    sub = *subset;
    std::vector<char> seen(g.n_vertices, 0);
    for (int v : sub) {
      if (v < 0 || v >= g.n_vertices) throw InputError("census subset vertex out of range");
      if (seen[v]++) throw InputError("repeated census subset vertex");
    }
  } else {
    sub.resize(g.n_vertices);
    for (int v = 0; v < g.n_vertices; ++v) sub[v] = v;
  }
  if (sub.size() > 64) throw SizeError("anomaly profile subset larger than 64 vertices");

  const uint64_t total = uint64_t{1} << (2 * m);
  auto make_scratch = [&] {
    GraphScratch s;
    s.stamp.assign(g.n_vertices, UINT64_MAX);
    s.color.assign(g.n_vertices + m, 0);
    s.inc.assign(g.n_vertices, {});
    for (int j = 0; j < m; ++j) {
      s.inc[g.edges[j].first].push_back({j, 2 * j});
      s.inc[g.edges[j].second].push_back({j, 2 * j + 1});
    }
    return s;
  };

  Tally tally;
  jobs = std::max(1, jobs);
  if (jobs == 1 || total < (uint64_t{1} << 16)) {
    GraphScratch s = make_scratch();
    graph_census_range(g, sub, 0, total, s, tally);
  } else {
    const uint64_t chunk = uint64_t{1} << 16;
    const uint64_t n_chunks = (total + chunk - 1) / chunk;
    std::atomic<uint64_t> next{0};
    std::vector<Tally> parts(jobs);
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        GraphScratch s = make_scratch();
        for (uint64_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) {
          uint64_t lo = c * chunk;
          graph_census_range(g, sub, lo, std::min(lo + chunk, total), s, parts[w]);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const Tally& p : parts) tally.merge(p);
  }

  FlowCensus census;
  census.total = total;
  census.flows = tally.flows;
  census.acyclic = tally.acyclic;
  census.subset = std::move(sub);
  census.profiles.assign(tally.profiles.begin(), tally.profiles.end());
  return census;
}

namespace {

struct ComplexScratch {
  std::vector<uint64_t> stamp;                       // per face
  std::vector<int8_t> color;
  std::vector<std::pair<int, size_t>> stack;
  std::vector<std::vector<std::pair<int, int>>> inc; // per face: (hasse edge, role 0=parent 1=child)
};

bool complex_code_is_flow(const HasseDiagram& h, uint64_t code, std::vector<uint64_t>& stamp) {
  for (size_t i = 0; i < h.edges.size(); ++i) {
    if (!((code >> i) & 1)) continue;
    for (int f : {h.edges[i].parent, h.edges[i].child}) {
      if (stamp[f] == code) return false;
      stamp[f] = code;
    }
  }
  return true;
}

bool complex_code_is_acyclic(const HasseDiagram& h, uint64_t code, ComplexScratch& s) {
  const int nodes = h.node_count();
  std::fill(s.color.begin(), s.color.end(), int8_t{0});
  for (int start = 0; start < nodes; ++start) {
    if (s.color[start]) continue;
    s.stack.clear();
    s.stack.push_back({start, 0});
    s.color[start] = 1;
    while (!s.stack.empty()) {
      auto& [u, next] = s.stack.back();
      int to = -1;
      const auto& iu = s.inc[u];
      while (next < iu.size()) {
        auto [i, role] = iu[next++];
        // Out-edge when the sign matches the role: parent moves down on +1,
        // child moves up on -1.
        if (static_cast<int>((code >> i) & 1) == role) {
          to = role == 0 ? h.edges[i].child : h.edges[i].parent;
          break;
        }
      }
      if (to == -1) {
        s.color[u] = 2;
        s.stack.pop_back();
      } else if (s.color[to] == 0) {
        s.color[to] = 1;
        s.stack.push_back({to, 0});
      } else if (s.color[to] == 1) {
        return false;
      }
    }
  }
  return true;
}

void complex_census_range(const HasseDiagram& h, uint64_t lo, uint64_t hi,
                          ComplexScratch& s, Tally& t) {
  for (uint64_t code = lo; code < hi; ++code) {
    if (!complex_code_is_flow(h, code, s.stamp)) continue;
    ++t.flows;
    if (complex_code_is_acyclic(h, code, s)) ++t.acyclic;
  }
}

}  // namespace

FlowCensus brute_force_complex(const SimplicialComplex& c, uint64_t limit, int jobs) {
  HasseDiagram h = hasse(c);
  const int e = h.edge_count();
  if (e > 62 || (uint64_t{1} << e) > limit)
    throw SizeError("2^incidences exceeds the enumeration limit");

  const uint64_t total = uint64_t{1} << e;
  auto make_scratch = [&] {
    ComplexScratch s;
    s.stamp.assign(h.node_count(), UINT64_MAX);
    s.color.assign(h.node_count(), 0);
    s.inc.assign(h.node_count(), {});
    for (int i = 0; i < e; ++i) {
      s.inc[h.edges[i].parent].push_back({i, 0});
      s.inc[h.edges[i].child].push_back({i, 1});
    }
    return s;
  };

  Tally tally;
  jobs = std::max(1, jobs);
  if (jobs == 1 || total < (uint64_t{1} << 16)) {
    ComplexScratch s = make_scratch();
    complex_census_range(h, 0, total, s, tally);
  } else {
    const uint64_t chunk = uint64_t{1} << 16;
    const uint64_t n_chunks = (total + chunk - 1) / chunk;
    std::atomic<uint64_t> next{0};
    std::vector<Tally> parts(jobs);
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        ComplexScratch s = make_scratch();
        for (uint64_t cidx = next.fetch_add(1); cidx < n_chunks; cidx = next.fetch_add(1)) {
          uint64_t lo = cidx * chunk;
          complex_census_range(h, lo, std::min(lo + chunk, total), s, parts[w]);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const Tally& p : parts) tally.merge(p);
  }

  FlowCensus census;
  census.total = total;
  census.flows = tally.flows;
  census.acyclic = tally.acyclic;
  return census;
}

}  // namespace morseflow
