// Command-line front end: probabilities, flow checks and deformation,
// cross-engine verification, experiments, family tables.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morseflow/errors.hpp"
#include "morseflow/families.hpp"
#include "morseflow/flow.hpp"
#include "morseflow/io.hpp"
#include "morseflow/oracle.hpp"
#include "morseflow/poly.hpp"
#include "morseflow/randlab.hpp"
#include "morseflow/rational.hpp"
#include "morseflow/rng.hpp"
#include "morseflow/verification.hpp"

namespace mf = morseflow;
using mf::Json;
using mf::Rational;

namespace {

std::string g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string frac(const Rational& p) {
  return p.get_num().get_str() + "/" + p.get_den().get_str();
}

Json frac_json(const Rational& p) {
  return Json{{"num", p.get_num().get_str()},
              {"den", p.get_den().get_str()},
              {"value", mf::rational_to_double(p)}};
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty())
    std::cout << text;
  else
    mf::write_file(output, text);
}

// Either a graph or a general complex, with its Hasse diagram.
struct Loaded {
  std::optional<mf::Graph> graph;
  std::optional<mf::SimplicialComplex> complex;
  mf::HasseDiagram h;

  std::string describe() const {
    std::ostringstream os;
    if (graph)
      os << "graph: " << graph->n_vertices << " vertices, " << graph->edge_count() << " edges";
    else
      os << "complex: " << complex->face_count() << " faces, dimension " << complex->dim();
    return os.str();
  }
};

Loaded load_object(const std::string& path) {
  const std::string text = mf::read_file(path);
  const size_t first = text.find_first_not_of(" \t\r\n");
  Loaded out;
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw mf::InputError(std::string("cannot parse ") + path + ": " + e.what());
    }
    if (j.contains("facets")) {
      out.complex = mf::complex_from_json(j);
      out.h = mf::hasse(*out.complex);
      return out;
    }
    out.graph = mf::graph_from_json(j);
  } else {
    out.graph = mf::graph_from_edge_list(text);
  }
  out.h = mf::hasse(*out.graph);
  return out;
}

std::string face_str(const mf::Face& f) {
  std::string s = "{";
  for (size_t i = 0; i < f.size(); ++i) s += (i ? " " : "") + std::to_string(f[i]);
  return s + "}";
}

// ---------------------------------------------------------------- prob

struct ProbOptions {
  std::string input, family, engine = "exact", format = "text", output, dump_poly;
  uint64_t seed = 0, samples = 1000000, limit = mf::kOracleLimit;
  int jobs = 1;
  bool seed_given = false;
};

int run_prob(const ProbOptions& o) {
  if (o.input.empty() == o.family.empty())
    throw mf::InputError("give exactly one of --input and --family");
  const mf::Graph g = o.input.empty() ? mf::family_graph(o.family) : mf::load_graph_file(o.input);
  const long long m = g.edge_count();

  if (!o.dump_poly.empty()) {
    if (o.engine != "exact") throw mf::InputError("--dump-poly needs the exact engine");
    mf::write_file(o.dump_poly, mf::poly_to_json(mf::graph_poly(g)).dump(2) + "\n");
  }

  Json report{{"graph", mf::graph_to_json(g)}, {"engine", o.engine}, {"edge_count", m}};
  std::ostringstream text;
  text << "graph: " << g.n_vertices << " vertices, " << m << " edges\n";

  if (o.engine == "exact" || o.engine == "brute") {
    Rational p;
    if (o.engine == "exact") {
      p = mf::prob(g);
    } else {
      mf::FlowCensus c = mf::brute_force_census(g, std::vector<int>{}, o.limit, o.jobs);
      p = c.flow_probability();
      report["census"] = Json{{"total", c.total}, {"flows", c.flows}, {"acyclic", c.acyclic}};
      text << "census: " << c.flows << " flows of " << c.total << " prescriptions, "
           << c.acyclic << " acyclic\n";
    }
    const double h = mf::h_invariant(p, m);
    report["p"] = frac_json(p);
    report["h"] = h;
    text << "P = " << frac(p) << " = " << g12(mf::rational_to_double(p)) << "\n"
         << "h = " << g12(h) << "\n";
  } else if (o.engine == "mc") {
    if (!o.seed_given) throw mf::InputError("--engine mc needs --seed");
    mf::McEstimate e = mf::mc_prob(g, o.samples, o.seed, o.jobs);
    mf::HEstimate he = mf::mc_h(e, m);
    report["estimate"] = Json{{"value", e.estimate},
                              {"ci_half_width", e.ci_half_width},
                              {"ci", Json::array({e.ci_low, e.ci_high})},
                              {"samples", e.samples},
                              {"hits", e.hits},
                              {"seed", e.seed}};
    report["h"] = Json{{"value", he.value}, {"upper_bound_only", he.upper_bound_only}};
    text << "P ~ " << g12(e.estimate) << "   95% CI [" << g12(e.ci_low) << ", "
         << g12(e.ci_high) << "]\n"
         << "samples = " << e.samples << "   hits = " << e.hits << "   seed = " << e.seed << "\n";
    if (he.upper_bound_only)
      text << "h <= " << g12(he.value) << "   (upper bound, no flow sampled)\n";
    else
      text << "h ~ " << g12(he.value) << "\n";
  } else {
    throw mf::InputError("unknown engine '" + o.engine + "' (exact, brute, mc)");
  }

  emit(o.format == "json" ? report.dump(2) + "\n" : text.str(), o.output);
  return 0;
}

// ---------------------------------------------------------------- flow

struct FlowOptions {
  std::string input, prescription, policy = "det", format = "text", output;
  uint64_t seed = 0;
};

Json signs_json(const mf::OrientationPrescription& w) { return mf::prescription_to_json(w); }

int run_flow_check(const FlowOptions& o) {
  Loaded in = load_object(o.input);
  mf::OrientationPrescription w =
      mf::prescription_from_json(in.h, Json::parse(mf::read_file(o.prescription)));
  mf::AnomalyProfile a = mf::anomaly(in.h, w);
  const bool flow = mf::is_flow(in.h, w);
  const bool matching = mf::is_matching(in.h, w);
  const bool acyclic = mf::is_acyclic(in.h, w);

  int counts[3] = {0, 0, 0};
  std::vector<int> bad;
  for (int f = 0; f < in.h.node_count(); ++f) {
    int t = a.total(f);
    ++counts[std::min(t, 2)];
    if (t > 1) bad.push_back(f);
  }

  Json report{{"flow", flow},       {"matching", matching},
              {"acyclic", acyclic}, {"minus_signs", w.sign_count()},
              {"faces", in.h.node_count()}};
  Json anomalies = Json::array();
  for (int f = 0; f < in.h.node_count(); ++f) anomalies.push_back(a.total(f));
  report["anomalies"] = anomalies;

  std::ostringstream text;
  text << in.describe() << "\n"
       << "minus signs: " << w.sign_count() << " of " << in.h.edge_count() << "\n"
       << "flow: " << (flow ? "yes" : "no") << "   matching: " << (matching ? "yes" : "no")
       << "   acyclic: " << (acyclic ? "yes" : "no") << "\n"
       << "anomalies: " << counts[0] << " faces at 0, " << counts[1] << " at 1, " << counts[2]
       << " at 2 or more\n";
  for (int f : bad) text << "  anomaly " << a.total(f) << " at " << face_str(in.h.faces[f]) << "\n";

  emit(o.format == "json" ? report.dump(2) + "\n" : text.str(), o.output);
  return 0;
}

int run_flow_deform(const FlowOptions& o) {
  Loaded in = load_object(o.input);
  mf::OrientationPrescription w =
      mf::prescription_from_json(in.h, Json::parse(mf::read_file(o.prescription)));
  mf::DeformPolicy policy;
  if (o.policy == "det")
    policy = mf::DeformPolicy::Deterministic;
  else if (o.policy == "random")
    policy = mf::DeformPolicy::SeededRandom;
  else
    throw mf::InputError("unknown policy '" + o.policy + "' (det, random)");

  const int before = w.sign_count();
  mf::DeformResult r = mf::deform_to_acyclic(in.h, w, policy, o.seed);

  Json report = signs_json(r.prescription);
  report["flipped"] = r.flipped;

  std::ostringstream text;
  text << in.describe() << "\n"
       << "input: flow with " << before << " minus signs, "
       << (r.flipped.empty() ? "already acyclic" : "cyclic") << "\n"
       << "flips: " << r.flipped.size();
  if (!r.flipped.empty()) {
    text << "   (hasse edges:";
    for (int he : r.flipped) text << " " << he;
    text << ")";
  }
  text << "\nresult: acyclic flow with " << r.prescription.sign_count() << " minus signs\n";

  if (o.format == "json") {
    emit(report.dump(2) + "\n", o.output);
  } else {
    std::cout << text.str();
    if (!o.output.empty()) mf::write_file(o.output, report.dump(2) + "\n");
  }
  return 0;
}

int run_flow_morse(const FlowOptions& o) {
  Loaded in = load_object(o.input);
  mf::OrientationPrescription w =
      mf::prescription_from_json(in.h, Json::parse(mf::read_file(o.prescription)));
  mf::MorseFunction f = mf::morse_from_flow(in.h, w);
  mf::MorsePrescription back = mf::flow_from_morse(in.h, f.values);
  const bool round_trip = back.morse && back.prescription == w;

  Json report = mf::morse_to_json(in.h, f);
  report["round_trip"] = round_trip;

  std::ostringstream text;
  text << in.describe() << "\n"
       << "morse function: injective on " << in.h.node_count() << " faces\n"
       << "round trip: " << (round_trip ? "exact" : "MISMATCH") << "\n";

  if (o.format == "json") {
    emit(report.dump(2) + "\n", o.output);
  } else {
    std::cout << text.str();
    if (!o.output.empty())
      mf::write_file(o.output, report.dump(2) + "\n");
    else
      std::cout << report.dump(2) << "\n";
  }
  return round_trip ? 0 : 1;
}

// ---------------------------------------------------------------- verify

int run_verify(bool deep, uint64_t seed, bool inject_fault, const std::string& format) {
  mf::VerifyOptions opt;
  opt.deep = deep;
  opt.seed = seed;
  opt.inject_fault = inject_fault;
  std::vector<mf::CheckResult> results = mf::run_verification(opt);

  int failed = 0;
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) {
      arr.push_back(Json{{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
      failed += !r.ok;
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      if (r.ok) {
        std::cout << "ok   " << r.name << "\n";
      } else {
        std::cout << "FAIL " << r.name;
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
        ++failed;
      }
    }
    std::cout << results.size() << " checks, " << results.size() - failed << " ok, " << failed
              << " failed\n";
  }
  return failed ? 1 : 0;
}

// ---------------------------------------------------------------- experiment

struct CsvRow {
  std::string experiment;
  int n = 0;
  std::string n_or_p, x;
  uint64_t samples = 0, hits = 0;
  std::string estimate, ci;
  uint64_t seed = 0;
};

void write_artifacts(const std::string& out, const std::vector<CsvRow>& rows, Json mirror) {
  std::string base = out;
  if (base.size() > 4 && base.compare(base.size() - 4, 4, ".csv") == 0)
    base.resize(base.size() - 4);
  std::ostringstream csv;
  csv << "experiment,n,N_or_p,x,samples,hits,estimate,ci,seed\n";
  Json jrows = Json::array();
  for (const CsvRow& r : rows) {
    csv << r.experiment << "," << r.n << "," << r.n_or_p << "," << r.x << "," << r.samples << ","
        << r.hits << "," << r.estimate << "," << r.ci << "," << r.seed << "\n";
    jrows.push_back(Json{{"experiment", r.experiment},
                         {"n", r.n},
                         {"N_or_p", r.n_or_p},
                         {"x", r.x},
                         {"samples", r.samples},
                         {"hits", r.hits},
                         {"estimate", r.estimate},
                         {"ci", r.ci},
                         {"seed", r.seed}});
  }
  mirror["rows"] = jrows;
  mf::write_file(base + ".csv", csv.str());
  mf::write_file(base + ".json", mirror.dump(2) + "\n");
  std::cout << "wrote " << base << ".csv and " << base << ".json\n";
}

std::vector<long long> parse_grid(const std::string& spec) {
  std::vector<long long> grid;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const size_t colon = tok.find(':');
    try {
      if (colon == std::string::npos) {
        grid.push_back(std::stoll(tok));
      } else {
        const size_t colon2 = tok.find(':', colon + 1);
        long long a = std::stoll(tok.substr(0, colon));
        long long b, step = 1;
        if (colon2 == std::string::npos) {
          b = std::stoll(tok.substr(colon + 1));
        } else {
          b = std::stoll(tok.substr(colon + 1, colon2 - colon - 1));
          step = std::stoll(tok.substr(colon2 + 1));
        }
        if (step <= 0) throw mf::InputError("grid step must be positive");
        for (long long v = a; v <= b; v += step) grid.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw mf::InputError("cannot parse grid token '" + tok + "'");
    }
  }
  if (grid.empty()) throw mf::InputError("empty grid");
  return grid;
}

struct ExperimentOptions {
  std::string output;
  uint64_t seed = 0;
  // threshold
  double x = 0.0;
  int n = 0;
  std::string edges;
  uint64_t samples_per_cell = 100;
  std::string engine = "auto";
  uint64_t mc_samples = 200000;
  // gnp
  std::string ps;
  uint64_t samples = 100;
  bool x_given = false;
  // trees
  bool exhaustive = false;
};

mf::HEngine engine_from(const std::string& s) {
  if (s == "auto") return mf::HEngine::Auto;
  if (s == "poly") return mf::HEngine::Poly;
  if (s == "brute") return mf::HEngine::Brute;
  if (s == "mc") return mf::HEngine::Mc;
  throw mf::InputError("unknown engine '" + s + "' (auto, poly, brute, mc)");
}

int run_threshold(const ExperimentOptions& o) {
  std::vector<long long> grid = parse_grid(o.edges);
  mf::ThresholdScan scan = mf::threshold_scan(o.x, o.n, grid, o.samples_per_cell, o.seed,
                                              engine_from(o.engine), o.mc_samples);
  std::vector<CsvRow> rows;
  for (const mf::ThresholdCell& c : scan.cells)
    rows.push_back({"threshold", scan.n, std::to_string(c.edge_target), g12(scan.x), c.samples,
                    c.hits, g12(c.fraction), g12(c.ci_half_width), scan.seed});
  Json mirror{{"config", Json{{"experiment", "threshold"},
                              {"x", scan.x},
                              {"n", scan.n},
                              {"edge_grid", grid},
                              {"samples_per_cell", o.samples_per_cell},
                              {"engine", o.engine},
                              {"mc_samples", o.mc_samples},
                              {"seed", scan.seed}}}};
  write_artifacts(o.output, rows, std::move(mirror));
  return 0;
}

int run_gnp(const ExperimentOptions& o) {
  if (o.n < 1 || o.n > 20) throw mf::InputError("gnp experiment is exact-only; n must be 1..20");
  std::vector<double> ps;
  {
    std::stringstream ss(o.ps);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        ps.push_back(std::stod(tok));
      } catch (const std::logic_error&) {
        throw mf::InputError("cannot parse probability '" + tok + "'");
      }
    }
    if (ps.empty()) throw mf::InputError("empty probability list");
    for (double p : ps)
      if (!(p >= 0.0 && p <= 1.0)) throw mf::InputError("edge probability outside [0, 1]");
  }

  std::vector<CsvRow> rows;
  Json histograms = Json::array();
  for (size_t pi = 0; pi < ps.size(); ++pi) {
    std::vector<double> hs;
    uint64_t hits = 0;
    for (uint64_t s = 0; s < o.samples; ++s) {
      mf::Graph g = mf::sample_gnp(o.n, ps[pi], mf::mix_seed(o.seed, pi, s));
      const double h = mf::h_invariant(mf::prob(g), g.edge_count());
      hs.push_back(h);
      if (!o.x_given || h <= o.x) ++hits;
    }
    double mean = 0.0;
    for (double h : hs) mean += h;
    mean /= static_cast<double>(hs.size());
    double var = 0.0;
    for (double h : hs) var += (h - mean) * (h - mean);
    var = hs.size() > 1 ? var / static_cast<double>(hs.size() - 1) : 0.0;
    const double ci = 1.959963984540054 * std::sqrt(var / static_cast<double>(hs.size()));
    rows.push_back({"gnp", o.n, g12(ps[pi]), o.x_given ? g12(o.x) : "", o.samples, hits, g12(mean),
                    g12(ci), o.seed});
    histograms.push_back(Json{{"p", ps[pi]}, {"h", hs}});
  }
  Json mirror{{"config", Json{{"experiment", "gnp"},
                              {"n", o.n},
                              {"p_grid", ps},
                              {"samples", o.samples},
                              {"seed", o.seed}}},
              {"histograms", histograms}};
  write_artifacts(o.output, rows, std::move(mirror));
  return 0;
}

int run_trees(const ExperimentOptions& o) {
  mf::TreeExtremes t = mf::tree_extremes(o.n, o.exhaustive, o.samples, o.seed);
  std::vector<CsvRow> rows;
  rows.push_back({"trees_hmin", o.n, std::to_string(o.n), "", t.trees_seen, t.trees_seen,
                  g12(t.h_min), "0", o.seed});
  rows.push_back({"trees_hmax", o.n, std::to_string(o.n), "", t.trees_seen, t.trees_seen,
                  g12(t.h_max), "0", o.seed});
  Json mirror{{"config", Json{{"experiment", "trees"},
                              {"n", o.n},
                              {"exhaustive", o.exhaustive},
                              {"samples", o.samples},
                              {"seed", o.seed}}},
              {"p_min", frac_json(t.p_min)},
              {"p_max", frac_json(t.p_max)},
              {"argmin", mf::graph_to_json(t.argmin)},
              {"argmax", mf::graph_to_json(t.argmax)},
              {"trees_seen", t.trees_seen}};
  write_artifacts(o.output, rows, std::move(mirror));
  return 0;
}

// ---------------------------------------------------------------- table

struct TableOptions {
  std::string family, output;
  long min = 1, max = 0;
};

void table_row(std::ostringstream& csv, const std::string& name, const std::string& params,
               long long edges, const Rational& p) {
  csv << name << ",\"" << params << "\"," << edges << "," << p.get_num().get_str() << ","
      << p.get_den().get_str() << "," << g12(mf::rational_to_double(p)) << ","
      << g12(mf::h_invariant(p, edges)) << "\n";
}

int run_table(const TableOptions& o) {
  std::ostringstream csv;
  csv << "family,params,N,P_num,P_den,P_float,h\n";
  const size_t colon = o.family.find(':');
  if (colon != std::string::npos || o.max == 0) {
    // One explicit instance.
    const mf::Graph g = mf::family_graph(o.family);
    const std::string name = o.family.substr(0, colon);
    const std::string params = colon == std::string::npos ? "" : o.family.substr(colon + 1);
    table_row(csv, name, params, g.edge_count(), mf::prob(g));
  } else {
    for (long n = o.min; n <= o.max; ++n) {
      if (o.family == "path")
        table_row(csv, "path", std::to_string(n), n, mf::path_prob(n));
      else if (o.family == "star")
        table_row(csv, "star", std::to_string(n), n, mf::star_prob(n));
      else if (o.family == "cycle")
        table_row(csv, "cycle", std::to_string(n), n, mf::cycle_prob(n));
      else if (o.family == "complete")
        table_row(csv, "complete", std::to_string(n), n * (n - 1) / 2,
                  mf::complete_prob(static_cast<int>(n)));
      else
        throw mf::InputError("sweeps need a one-parameter family (path, star, cycle, complete)");
    }
  }
  emit(csv.str(), o.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial Morse flows: exact probabilities, deformation, experiments"};
  app.require_subcommand(1);

  ProbOptions po;
  CLI::App* prob = app.add_subcommand("prob", "flow probability of a graph");
  prob->add_option("--input", po.input, "graph file (JSON or edge list)");
  prob->add_option("--family", po.family, "family spec, e.g. cycle:5 or octopus:2,1,1");
  prob->add_option("--engine", po.engine, "exact, brute or mc")->capture_default_str();
  auto* prob_seed = prob->add_option("--seed", po.seed, "Monte Carlo seed");
  prob->add_option("--samples", po.samples, "Monte Carlo sample count")->capture_default_str();
  prob->add_option("--jobs", po.jobs, "worker threads")->capture_default_str();
  prob->add_option("--limit", po.limit, "enumeration size limit")->capture_default_str();
  prob->add_option("--format", po.format, "text or json")->capture_default_str();
  prob->add_option("--output", po.output, "write the report here instead of stdout");
  prob->add_option("--dump-poly", po.dump_poly, "write the truncated polynomial as JSON");

  FlowOptions fo;
  CLI::App* flow = app.add_subcommand("flow", "prescription checks, deformation, Morse functions");
  flow->require_subcommand(1);
  CLI::App* fcheck = flow->add_subcommand("check", "anomalies, flow, matching, acyclicity");
  CLI::App* fdeform = flow->add_subcommand("deform", "deform a flow to an acyclic flow");
  CLI::App* fmorse = flow->add_subcommand("morse", "Morse function of an acyclic flow");
  for (CLI::App* sub : {fcheck, fdeform, fmorse}) {
    sub->add_option("--input", fo.input, "graph or complex file")->required();
    sub->add_option("--prescription", fo.prescription, "prescription JSON file")->required();
    sub->add_option("--format", fo.format, "text or json")->capture_default_str();
    sub->add_option("--output", fo.output, "write the resulting artifact here");
  }
  fdeform->add_option("--policy", fo.policy, "det or random")->capture_default_str();
  fdeform->add_option("--seed", fo.seed, "seed for --policy random");

  bool v_deep = false, v_fault = false;
  uint64_t v_seed = 20260822;
  std::string v_format = "text";
  CLI::App* verify = app.add_subcommand("verify", "cross-engine agreement and pinned values");
  verify->add_flag("--deep", v_deep, "add randomized cross-checks");
  verify->add_option("--seed", v_seed, "seed for the randomized checks")->capture_default_str();
  verify->add_flag("--inject-fault", v_fault, "corrupt one expected value; must fail");
  verify->add_option("--format", v_format, "text or json")->capture_default_str();

  ExperimentOptions eo;
  CLI::App* experiment = app.add_subcommand("experiment", "sampling experiments, CSV + JSON out");
  experiment->require_subcommand(1);
  CLI::App* thr = experiment->add_subcommand("threshold", "fraction of G(n,N) with h <= x");
  thr->add_option("--x", eo.x, "entropy cutoff")->required();
  thr->add_option("--n", eo.n, "vertex count")->required();
  thr->add_option("--edges", eo.edges, "edge grid, e.g. 1,2,4 or 0:16 or 0:16:2")->required();
  thr->add_option("--samples-per-cell", eo.samples_per_cell, "graphs per grid point")
      ->capture_default_str();
  thr->add_option("--engine", eo.engine, "auto, poly, brute or mc")->capture_default_str();
  thr->add_option("--mc-samples", eo.mc_samples, "samples per Monte Carlo estimate")
      ->capture_default_str();
  CLI::App* gnp = experiment->add_subcommand("gnp", "h statistics over G(n,p)");
  gnp->add_option("--n", eo.n, "vertex count (exact engine, at most 20)")->required();
  gnp->add_option("--p", eo.ps, "comma list of edge probabilities")->required();
  gnp->add_option("--samples", eo.samples, "graphs per probability")->capture_default_str();
  auto* gnp_x = gnp->add_option("--x", eo.x, "also count graphs with h <= x");
  CLI::App* trees = experiment->add_subcommand("trees", "extremes of h over labeled trees");
  trees->add_option("--n", eo.n, "edges per tree")->required();
  trees->add_flag("--exhaustive", eo.exhaustive, "walk all (n+1)^(n-1) trees (n <= 8)");
  trees->add_option("--samples", eo.samples, "sampled mode: number of random trees")
      ->capture_default_str();
  for (CLI::App* sub : {thr, gnp, trees}) {
    sub->add_option("--seed", eo.seed, "experiment seed, embedded in the output")->required();
    sub->add_option("--output", eo.output, "artifact base path (.csv and .json)")->required();
  }

  TableOptions to;
  CLI::App* table = app.add_subcommand("table", "closed-form family tables as CSV");
  table->add_option("--family", to.family, "family name or explicit spec")->required();
  table->add_option("--min", to.min, "sweep start")->capture_default_str();
  table->add_option("--max", to.max, "sweep end (0: single instance)")->capture_default_str();
  table->add_option("--output", to.output, "write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    po.seed_given = prob_seed->count() > 0;
    eo.x_given = gnp_x->count() > 0;
    if (prob->parsed()) return run_prob(po);
    if (fcheck->parsed()) return run_flow_check(fo);
    if (fdeform->parsed()) return run_flow_deform(fo);
    if (fmorse->parsed()) return run_flow_morse(fo);
    if (verify->parsed()) return run_verify(v_deep, v_seed, v_fault, v_format);
    if (thr->parsed()) return run_threshold(eo);
    if (gnp->parsed()) return run_gnp(eo);
    if (trees->parsed()) return run_trees(eo);
    if (table->parsed()) return run_table(to);
  } catch (const mf::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const mf::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
