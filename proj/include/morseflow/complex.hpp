#pragma once

// Simplicial complexes, graphs as 1-dimensional complexes, and Hasse diagrams.
//
// Canonical conventions used across the library:
//  - a face is a strictly increasing list of vertex ids;
//  - complex faces are ordered by (dimension, lexicographic);
//  - graph edges are stored as (u, v) with u < v, sorted lexicographically;
//  - the Hasse diagram of a graph therefore lists, for edge j, the incidence
//    with its lower endpoint at position 2j and the higher at 2j+1.

#include <cstdint>
#include <utility>
#include <vector>

namespace morseflow {

using Face = std::vector<int>;

// (dimension, lex) order on faces.
bool face_less(const Face& a, const Face& b);

struct SimplicialComplex {
  std::vector<Face> faces;  // downward closed, canonical order

  int face_count() const { return static_cast<int>(faces.size()); }
  int dim() const;                        // -1 when empty
  int face_index(const Face& f) const;    // -1 when absent
  bool operator==(const SimplicialComplex&) const = default;
};

// Downward closure of the given facets. Facets are vertex sets; repeated
// vertices or repeated faces across facets are rejected/merged respectively.
SimplicialComplex build_complex(const std::vector<Face>& facets);

struct Graph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // canonical

  int edge_count() const { return static_cast<int>(edges.size()); }
  int component_count() const;
  bool operator==(const Graph&) const = default;
};

// Validates ids, rejects loops and repeated edges, canonicalizes order.
Graph make_graph(int n_vertices, std::vector<std::pair<int, int>> edges);

// The graph as a complex: every vertex as a 0-face, every edge as a 1-face.
SimplicialComplex graph_complex(const Graph& g);

struct HasseEdge {
  int parent;  // face index of the higher-dimensional face
  int child;   // face index of its codimension-1 face
  bool operator==(const HasseEdge&) const = default;
};

struct HasseDiagram {
  std::vector<Face> faces;       // same canonical order as the complex
  std::vector<int> dims;         // dims[i] = dimension of faces[i]
  std::vector<HasseEdge> edges;  // sorted by (parent, child)

  int node_count() const { return static_cast<int>(faces.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

HasseDiagram hasse(const SimplicialComplex& c);
HasseDiagram hasse(const Graph& g);

struct IncidencePair {
  int vertex;
  int edge;
  bool operator==(const IncidencePair&) const = default;
};

// All (endpoint, edge) pairs, edge-major, lower endpoint first.
std::vector<IncidencePair> incidence_pairs(const Graph& g);

// Standard families. Vertex numbering is part of the format contract:
// paths 0-1-...-n; stars and the glue vertex of octopus/dandelion at 0;
// cycles 0-1-...-(n-1)-0; octopus arms numbered consecutively outward,
// arm by arm, in argument order; dandelion = path arm first, then leaves.
Graph path_graph(int n);                             // L_n, n >= 1
Graph star_graph(int n);                             // S_n, n >= 1
Graph cycle_graph(int n);                            // C_n, n >= 3
Graph complete_graph(int n);                         // K_n, n >= 2
Graph octopus_graph(const std::vector<int>& arms);   // >= 3 arms, each >= 1
Graph dandelion_graph(int n, int m);                 // n >= 1, m >= 1

// Relabels the right graph's vertices upward by left.n_vertices.
Graph disjoint_union(const Graph& a, const Graph& b);

struct QuotientResult {
  Graph graph;
  std::vector<int> projection;  // original vertex -> class index
  std::vector<int> edge_map;    // original edge index -> quotient edge index
};

// Identifies the vertices inside each class. The classes must partition the
// vertex set; identifications that would create a loop or a repeated edge are
// rejected, so the result is again a simple graph with the same edge count.
QuotientResult quotient(const Graph& g, const std::vector<std::vector<int>>& classes);

}  // namespace morseflow
