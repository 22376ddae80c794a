#pragma once

// External formats: JSON schemas for graphs, complexes, prescriptions, Morse
// functions, polynomials and censuses; the edge-list text format; and the
// family mini-grammar ("cycle:5", "octopus:2,1,1").

#include <string>
#include <vector>

#include "json.hpp"
#include "morseflow/complex.hpp"
#include "morseflow/flow.hpp"
#include "morseflow/oracle.hpp"
#include "morseflow/poly.hpp"

namespace morseflow {

using Json = nlohmann::json;

// {"n_vertices": n, "edges": [[u, v], ...]} with u < v.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// One "u v" pair per line; blank lines and #-comments ignored;
// n_vertices = max id + 1.
Graph graph_from_edge_list(const std::string& text);

// {"facets": [[...], ...]}.
Json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

// {"signs": [s, ...]} over Hasse edges, or for graphs the equivalent
// {"edge_signs": [[s_low, s_high], ...]} over graph edges.
Json prescription_to_json(const OrientationPrescription& w);
Json prescription_to_edge_signs(const HasseDiagram& h, const OrientationPrescription& w);
OrientationPrescription prescription_from_json(const HasseDiagram& h, const Json& j);

// {"values": [{"face": [...], "f": k}, ...]}, every face exactly once.
Json morse_to_json(const HasseDiagram& h, const MorseFunction& f);
std::vector<long long> morse_from_json(const HasseDiagram& h, const Json& j);

// {"coeffs": [{"subset": [v, ...], "num": "...", "den": "..."}, ...]},
// subsets sorted, numbers as decimal strings.
Json poly_to_json(const TruncatedPolynomial& p);
TruncatedPolynomial poly_from_json(const Json& j);

// {"total": "...", "flows": "...", "acyclic": "...", "subset": [...],
//  "profiles": [{"pattern": [0/1, ...], "count": "..."}, ...]}.
Json census_to_json(const FlowCensus& c);

// "path:4", "star:3", "cycle:5", "complete:6", "octopus:2,1,1",
// "dandelion:2,3". Single-letter aliases L/S/C/K/O/D are accepted.
Graph family_graph(const std::string& spec);

// Loads a graph from a file holding either graph JSON or edge-list text
// (detected by a leading '{').
Graph load_graph_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace morseflow
