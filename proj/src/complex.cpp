#include "morseflow/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "morseflow/errors.hpp"

namespace morseflow {

bool face_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

int SimplicialComplex::dim() const {
  return faces.empty() ? -1 : static_cast<int>(faces.back().size()) - 1;
}

int SimplicialComplex::face_index(const Face& f) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), f, face_less);
  if (it == faces.end() || *it != f) return -1;
  return static_cast<int>(it - faces.begin());
}

SimplicialComplex build_complex(const std::vector<Face>& facets) {
  std::set<Face> closure;
  for (const Face& raw : facets) {
    if (raw.empty()) throw InputError("empty facet");
    Face f = raw;
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InputError("repeated vertex in facet");
    if (f.front() < 0) throw InputError("negative vertex id in facet");
    if (f.size() > 20) throw SizeError("facet dimension too large to close");
    // Every nonempty subset of the facet is a face.
    const int k = static_cast<int>(f.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      Face sub;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(f[i]);
      closure.insert(std::move(sub));
    }
  }
  SimplicialComplex c;
  c.faces.assign(closure.begin(), closure.end());
  std::sort(c.faces.begin(), c.faces.end(), face_less);
  return c;
}

int Graph::component_count() const {
  std::vector<int> parent(n_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = n_vertices;
  for (auto [u, v] : edges) {
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  return components;
}

Graph make_graph(int n_vertices, std::vector<std::pair<int, int>> edges) {
  if (n_vertices < 0) throw InputError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
      throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("loop edge");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InputError("repeated edge");
  return Graph{n_vertices, std::move(edges)};
}

SimplicialComplex graph_complex(const Graph& g) {
  std::vector<Face> facets;
  facets.reserve(g.n_vertices + g.edges.size());
  for (int v = 0; v < g.n_vertices; ++v) facets.push_back({v});
  for (auto [u, v] : g.edges) facets.push_back({u, v});
  return build_complex(facets);
}

HasseDiagram hasse(const SimplicialComplex& c) {
  HasseDiagram h;
  h.faces = c.faces;
  h.dims.reserve(h.faces.size());
  for (const Face& f : h.faces) h.dims.push_back(static_cast<int>(f.size()) - 1);
  for (int p = 0; p < c.face_count(); ++p) {
    const Face& f = c.faces[p];
    if (f.size() < 2) continue;
    Face sub(f.size() - 1);
    for (size_t drop = 0; drop < f.size(); ++drop) {
      size_t w = 0;
      for (size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub[w++] = f[i];
      int child = c.face_index(sub);
      if (child < 0) throw InputError("complex is not downward closed");
      h.edges.push_back({p, child});
    }
  }
  std::sort(h.edges.begin(), h.edges.end(), [](const HasseEdge& a, const HasseEdge& b) {
    return a.parent != b.parent ? a.parent < b.parent : a.child < b.child;
  });
  return h;
}

HasseDiagram hasse(const Graph& g) { return hasse(graph_complex(g)); }

std::vector<IncidencePair> incidence_pairs(const Graph& g) {
  std::vector<IncidencePair> pairs;
  pairs.reserve(2 * g.edges.size());
  for (int j = 0; j < g.edge_count(); ++j) {
    pairs.push_back({g.edges[j].first, j});
    pairs.push_back({g.edges[j].second, j});
  }
  return pairs;
}

Graph path_graph(int n) {
  if (n < 1) throw InputError("path needs at least one edge");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, i + 1});
  return make_graph(n + 1, std::move(edges));
}

Graph star_graph(int n) {
  if (n < 1) throw InputError("star needs at least one ray");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({0, i});
  return make_graph(n + 1, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least three edges");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return make_graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 2) throw InputError("complete graph needs at least two vertices");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return make_graph(n, std::move(edges));
}

Graph octopus_graph(const std::vector<int>& arms) {
  if (arms.size() < 3) throw InputError("octopus needs at least three arms");
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int len : arms) {
    if (len < 1) throw InputError("octopus arm needs at least one edge");
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return make_graph(next, std::move(edges));
}

Graph dandelion_graph(int n, int m) {
  if (n < 1 || m < 1) throw InputError("dandelion needs n >= 1 and m >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, i + 1});
  for (int i = 0; i < m; ++i) edges.push_back({0, n + 1 + i});
  return make_graph(n + 1 + m, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges;
  for (auto [u, v] : b.edges) edges.push_back({u + a.n_vertices, v + a.n_vertices});
  return make_graph(a.n_vertices + b.n_vertices, std::move(edges));
}

QuotientResult quotient(const Graph& g, const std::vector<std::vector<int>>& classes) {
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

  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    int a = projection[u], b = projection[v];
    if (a == b) throw InputError("quotient would create a loop");
    mapped.push_back({std::min(a, b), std::max(a, b)});
  }
  {
    auto sorted = mapped;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("quotient would merge two edges");
  }
  Graph q = make_graph(static_cast<int>(classes.size()), mapped);
  std::vector<int> edge_map;
  edge_map.reserve(mapped.size());
  for (auto& e : mapped) {
    auto it = std::lower_bound(q.edges.begin(), q.edges.end(), e);
    edge_map.push_back(static_cast<int>(it - q.edges.begin()));
  }
  return {std::move(q), std::move(projection), std::move(edge_map)};
}

}  // namespace morseflow
