#include "morseflow/flow.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "morseflow/errors.hpp"
#include "morseflow/rng.hpp"

namespace morseflow {

int OrientationPrescription::sign_count() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), int8_t{-1}));
}

OrientationPrescription all_plus(const HasseDiagram& h) {
  return {std::vector<int8_t>(h.edges.size(), int8_t{1})};
}

static void check_sizes(const HasseDiagram& h, const OrientationPrescription& w) {
  if (w.signs.size() != h.edges.size())
    throw InputError("prescription length does not match the Hasse diagram");
  for (int8_t s : w.signs)
    if (s != 1 && s != -1) throw InputError("prescription signs must be +1 or -1");
}

AnomalyProfile anomaly(const HasseDiagram& h, const OrientationPrescription& w) {
  check_sizes(h, w);
  AnomalyProfile a;
  a.down.assign(h.faces.size(), 0);
  a.up.assign(h.faces.size(), 0);
  for (size_t i = 0; i < h.edges.size(); ++i) {
    if (w.signs[i] == -1) {
      ++a.down[h.edges[i].parent];
      ++a.up[h.edges[i].child];
    }
  }
  return a;
}

bool is_flow(const HasseDiagram& h, const OrientationPrescription& w) {
  AnomalyProfile a = anomaly(h, w);
  for (int f = 0; f < h.node_count(); ++f)
    if (a.total(f) > 1) return false;
  return true;
}

bool is_matching(const HasseDiagram& h, const OrientationPrescription& w) {
  check_sizes(h, w);
  std::vector<char> touched(h.faces.size(), 0);
  for (size_t i = 0; i < h.edges.size(); ++i) {
    if (w.signs[i] != -1) continue;
    for (int f : {h.edges[i].parent, h.edges[i].child}) {
      if (touched[f]) return false;
      touched[f] = 1;
    }
  }
  return true;
}

// Adjacency of the reoriented diagram; out-edges listed by ascending Hasse
// edge index, which fixes the deterministic DFS order used below.
static std::vector<std::vector<std::pair<int, int>>> oriented_adjacency(
    const HasseDiagram& h, const OrientationPrescription& w) {
  std::vector<std::vector<std::pair<int, int>>> adj(h.faces.size());
  for (size_t i = 0; i < h.edges.size(); ++i) {
    int from = h.edges[i].parent, to = h.edges[i].child;
    if (w.signs[i] == -1) std::swap(from, to);
    adj[from].push_back({to, static_cast<int>(i)});
  }
  return adj;
}

namespace {
struct Frame {
  int node;
  size_t next;
  int via;  // Hasse edge entering this node, -1 at a DFS root
};
}  // namespace

// First directed cycle under the deterministic DFS, as Hasse edge indices.
// Empty when acyclic.
static std::vector<int> find_cycle(const std::vector<std::vector<std::pair<int, int>>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> color(n, 0);  // 0 white, 1 on stack, 2 done
  for (int s = 0; s < n; ++s) {
    if (color[s]) continue;
    std::vector<Frame> st{{s, 0, -1}};
    color[s] = 1;
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.next < adj[f.node].size()) {
        auto [to, he] = adj[f.node][f.next++];
        if (color[to] == 0) {
          color[to] = 1;
          st.push_back({to, 0, he});
        } else if (color[to] == 1) {
          size_t i = st.size() - 1;
          while (st[i].node != to) --i;
          std::vector<int> cycle;
          for (size_t j = i + 1; j < st.size(); ++j) cycle.push_back(st[j].via);
          cycle.push_back(he);
          return cycle;
        }
      } else {
        color[f.node] = 2;
        st.pop_back();
      }
    }
  }
  return {};
}

bool is_acyclic(const HasseDiagram& h, const OrientationPrescription& w) {
  check_sizes(h, w);
  return find_cycle(oriented_adjacency(h, w)).empty();
}

DeformResult deform_to_acyclic(const HasseDiagram& h, const OrientationPrescription& w,
                               DeformPolicy policy, uint64_t seed) {
  if (!is_flow(h, w)) throw PreconditionError("deformation requires a flow");
  DeformResult r{w, {}};
  Rng rng(seed);
  int guard = r.prescription.sign_count();
  while (true) {
    std::vector<int> cycle = find_cycle(oriented_adjacency(h, r.prescription));
    if (cycle.empty()) break;
    // A directed cycle alternates down (+1) and up (-1) moves, so half its
    // edges carry -1 and the flip below always has a candidate.
    std::vector<int> negatives;
    for (int he : cycle)
      if (r.prescription.signs[he] == -1) negatives.push_back(he);
    std::sort(negatives.begin(), negatives.end());
    int pick = policy == DeformPolicy::Deterministic
                   ? negatives.front()
                   : negatives[rng.below(negatives.size())];
    r.prescription.signs[pick] = 1;
    r.flipped.push_back(pick);
    if (--guard < 0) throw PreconditionError("deformation failed to terminate");
  }
  return r;
}

bool is_morse(const HasseDiagram& h, const std::vector<long long>& values) {
  if (values.size() != h.faces.size())
    throw InputError("Morse function length does not match the Hasse diagram");
  // An edge with f(child) >= f(parent) is exceptional for both endpoints.
  std::vector<int> bad(h.faces.size(), 0);
  for (const HasseEdge& e : h.edges) {
    if (values[e.child] >= values[e.parent]) {
      ++bad[e.parent];
      ++bad[e.child];
    }
  }
  return std::all_of(bad.begin(), bad.end(), [](int b) { return b <= 1; });
}

MorseFunction morse_from_flow(const HasseDiagram& h, const OrientationPrescription& w) {
  if (!is_flow(h, w)) throw PreconditionError("Morse ranking requires a flow");
  auto adj = oriented_adjacency(h, w);
  const int n = h.node_count();

  std::vector<int> indegree(n, 0);
  for (int u = 0; u < n; ++u)
    for (auto [v, he] : adj[u]) ++indegree[v];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int u = 0; u < n; ++u)
    if (indegree[u] == 0) ready.push(u);
  std::vector<int> topo;
  topo.reserve(n);
  while (!ready.empty()) {
    int u = ready.top();
    ready.pop();
    topo.push_back(u);
    for (auto [v, he] : adj[u])
      if (--indegree[v] == 0) ready.push(v);
  }
  if (static_cast<int>(topo.size()) != n)
    throw PreconditionError("Morse ranking requires an acyclic flow");

  // Longest directed path leaving each face.
  std::vector<long long> depth(n, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    for (auto [v, he] : adj[*it]) depth[*it] = std::max(depth[*it], depth[v] + 1);
  }
  // Rank by (depth desc, index asc): a valid topological order, since an edge
  // u -> v forces depth[u] > depth[v]. Assign n-1 .. 0 along it.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return depth[a] != depth[b] ? depth[a] > depth[b] : a < b;
  });
  MorseFunction f;
  f.values.assign(n, 0);
  for (int pos = 0; pos < n; ++pos) f.values[order[pos]] = n - 1 - pos;
  return f;
}

MorsePrescription flow_from_morse(const HasseDiagram& h, const std::vector<long long>& values) {
  if (values.size() != h.faces.size())
    throw InputError("Morse function length does not match the Hasse diagram");
  MorsePrescription r;
  r.prescription.signs.reserve(h.edges.size());
  for (const HasseEdge& e : h.edges)
    r.prescription.signs.push_back(values[e.child] >= values[e.parent] ? int8_t{-1} : int8_t{1});
  r.morse = is_morse(h, values);
  return r;
}

}  // namespace morseflow
