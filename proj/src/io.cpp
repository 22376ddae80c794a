#include "morseflow/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>

#include "morseflow/errors.hpp"

namespace morseflow {

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return Json{{"n_vertices", g.n_vertices}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  try {
    const int n = j.at("n_vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be a [u, v] pair");
      const int u = e[0].get<int>(), v = e[1].get<int>();
      if (u >= v) throw InputError("graph JSON requires u < v in every edge");
      edges.push_back({u, v});
    }
    return make_graph(n, std::move(edges));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
}

Graph graph_from_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long u, v;
    if (!(ls >> u)) continue;  // blank
    if (!(ls >> v)) throw InputError("edge list line " + std::to_string(line_no) + ": expected two ids");
    std::string rest;
    if (ls >> rest) throw InputError("edge list line " + std::to_string(line_no) + ": trailing content");
    if (u < 0 || v < 0) throw InputError("edge list line " + std::to_string(line_no) + ": negative id");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
  }
  return make_graph(max_vertex + 1, std::move(edges));
}

Json complex_to_json(const SimplicialComplex& c) {
  Json facets = Json::array();
  for (int i = 0; i < c.face_count(); ++i) {
    const Face& f = c.faces[i];
    bool maximal = true;
    for (int k = 0; k < c.face_count() && maximal; ++k) {
      if (k == i || c.faces[k].size() <= f.size()) continue;
      maximal = !std::includes(c.faces[k].begin(), c.faces[k].end(), f.begin(), f.end());
    }
    if (maximal) facets.push_back(f);
  }
  return Json{{"facets", facets}};
}

SimplicialComplex complex_from_json(const Json& j) {
  try {
    std::vector<Face> facets;
    for (const Json& f : j.at("facets")) facets.push_back(f.get<Face>());
    return build_complex(facets);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed complex JSON: ") + e.what());
  }
}

Json prescription_to_json(const OrientationPrescription& w) {
  Json signs = Json::array();
  for (int8_t s : w.signs) signs.push_back(static_cast<int>(s));
  return Json{{"signs", signs}};
}

// Hasse diagrams of graphs pair the incidences of edge j at positions 2j
// (lower endpoint) and 2j+1; anything else is rejected.
static int graph_edge_count_of(const HasseDiagram& h) {
  if (h.edges.size() % 2 != 0) throw InputError("not the Hasse diagram of a graph");
  const int m = static_cast<int>(h.edges.size()) / 2;
  for (int j = 0; j < m; ++j) {
    const HasseEdge& lo = h.edges[2 * j];
    const HasseEdge& hi = h.edges[2 * j + 1];
    if (lo.parent != hi.parent || h.dims[lo.parent] != 1 || lo.child >= hi.child)
      throw InputError("not the Hasse diagram of a graph");
  }
  return m;
}

Json prescription_to_edge_signs(const HasseDiagram& h, const OrientationPrescription& w) {
  const int m = graph_edge_count_of(h);
  if (w.signs.size() != h.edges.size())
    throw InputError("prescription length does not match the Hasse diagram");
  Json pairs = Json::array();
  for (int j = 0; j < m; ++j)
    pairs.push_back({static_cast<int>(w.signs[2 * j]), static_cast<int>(w.signs[2 * j + 1])});
  return Json{{"edge_signs", pairs}};
}

OrientationPrescription prescription_from_json(const HasseDiagram& h, const Json& j) {
  try {
    OrientationPrescription w;
    if (j.contains("signs")) {
      for (const Json& s : j.at("signs")) w.signs.push_back(static_cast<int8_t>(s.get<int>()));
      if (w.signs.size() != h.edges.size())
        throw InputError("prescription length does not match the Hasse diagram");
    } else if (j.contains("edge_signs")) {
      const int m = graph_edge_count_of(h);
      const Json& pairs = j.at("edge_signs");
      if (static_cast<int>(pairs.size()) != m)
        throw InputError("edge_signs length does not match the graph");
      for (const Json& p : pairs) {
        if (!p.is_array() || p.size() != 2) throw InputError("edge_signs entries are [s_low, s_high]");
        w.signs.push_back(static_cast<int8_t>(p[0].get<int>()));
        w.signs.push_back(static_cast<int8_t>(p[1].get<int>()));
      }
    } else {
      throw InputError("prescription JSON needs \"signs\" or \"edge_signs\"");
    }
    for (int8_t s : w.signs)
      if (s != 1 && s != -1) throw InputError("prescription signs must be +1 or -1");
    return w;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed prescription JSON: ") + e.what());
  }
}

Json morse_to_json(const HasseDiagram& h, const MorseFunction& f) {
  if (f.values.size() != h.faces.size())
    throw InputError("Morse function length does not match the Hasse diagram");
  Json values = Json::array();
  for (size_t i = 0; i < h.faces.size(); ++i)
    values.push_back(Json{{"face", h.faces[i]}, {"f", f.values[i]}});
  return Json{{"values", values}};
}

std::vector<long long> morse_from_json(const HasseDiagram& h, const Json& j) {
  try {
    std::vector<long long> values(h.faces.size());
    std::vector<char> seen(h.faces.size(), 0);
    for (const Json& entry : j.at("values")) {
      Face face = entry.at("face").get<Face>();
      std::sort(face.begin(), face.end());
      auto it = std::lower_bound(h.faces.begin(), h.faces.end(), face, face_less);
      if (it == h.faces.end() || *it != face) throw InputError("Morse value on an unknown face");
      const size_t idx = it - h.faces.begin();
      if (seen[idx]) throw InputError("Morse value repeated for a face");
      seen[idx] = 1;
      values[idx] = entry.at("f").get<long long>();
    }
    if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c; }))
      throw InputError("Morse function misses a face");
    return values;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed Morse JSON: ") + e.what());
  }
}

Json poly_to_json(const TruncatedPolynomial& p) {
  std::vector<Face> subsets;
  subsets.reserve(p.coeffs.size());
  for (const auto& [mask, c] : p.coeffs) {
    Face s;
    for (uint64_t rest = mask; rest; rest &= rest - 1)
      s.push_back(std::countr_zero(rest));
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), face_less);
  Json coeffs = Json::array();
  for (const Face& s : subsets) {
    uint64_t mask = 0;
    for (int v : s) mask |= uint64_t{1} << v;
    const Rational& c = p.coeffs.at(mask);
    coeffs.push_back(Json{{"subset", s},
                          {"num", c.get_num().get_str()},
                          {"den", c.get_den().get_str()}});
  }
  return Json{{"coeffs", coeffs}};
}

TruncatedPolynomial poly_from_json(const Json& j) {
  try {
    TruncatedPolynomial p;
    for (const Json& entry : j.at("coeffs")) {
      uint64_t mask = 0;
      for (int v : entry.at("subset").get<Face>()) {
        if (v < 0 || v >= 64) throw InputError("polynomial subset vertex outside [0, 64)");
        mask |= uint64_t{1} << v;
      }
      if (p.coeffs.contains(mask)) throw InputError("repeated polynomial subset");
      p.coeffs[mask] = rational_from_strings(entry.at("num").get<std::string>(),
                                             entry.at("den").get<std::string>());
      p.support |= mask;
    }
    return p;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

Json census_to_json(const FlowCensus& c) {
  Json profiles = Json::array();
  for (auto [pattern, count] : c.profiles) {
    Json bits = Json::array();
    for (size_t i = 0; i < c.subset.size(); ++i)
      bits.push_back(static_cast<int>((pattern >> i) & 1));
    profiles.push_back(Json{{"pattern", bits}, {"count", std::to_string(count)}});
  }
  return Json{{"total", std::to_string(c.total)},
              {"flows", std::to_string(c.flows)},
              {"acyclic", std::to_string(c.acyclic)},
              {"subset", c.subset},
              {"profiles", profiles}};
}

Graph family_graph(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw InputError("family spec must look like name:params, e.g. cycle:5");
  std::string name = spec.substr(0, colon);
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  std::vector<int> params;
  std::stringstream ps(spec.substr(colon + 1));
  std::string tok;
  while (std::getline(ps, tok, ',')) {
    try {
      size_t used = 0;
      const int value = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      params.push_back(value);
    } catch (const std::exception&) {
      throw InputError("family parameter '" + tok + "' is not an integer");
    }
  }
  auto expect = [&](size_t k, const char* what) {
    if (params.size() != k)
      throw InputError("family '" + name + "' needs " + what);
  };
  if (name == "path" || name == "l") {
    expect(1, "one parameter");
    return path_graph(params[0]);
  }
  if (name == "star" || name == "s") {
    expect(1, "one parameter");
    return star_graph(params[0]);
  }
  if (name == "cycle" || name == "c") {
    expect(1, "one parameter");
    return cycle_graph(params[0]);
  }
  if (name == "complete" || name == "k") {
    expect(1, "one parameter");
    return complete_graph(params[0]);
  }
  if (name == "octopus" || name == "o") {
    if (params.size() < 3) throw InputError("octopus needs at least three arm lengths");
    return octopus_graph(params);
  }
  if (name == "dandelion" || name == "d") {
    expect(2, "two parameters: n,m");
    return dandelion_graph(params[0], params[1]);
  }
  throw InputError("unknown family '" + name + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

Graph load_graph_file(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return graph_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw InputError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
  }
  return graph_from_edge_list(text);
}

}  // namespace morseflow
