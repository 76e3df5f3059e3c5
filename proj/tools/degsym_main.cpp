// degsym: command-line front end for the degsym library.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "degsym/automorphism.hpp"
#include "degsym/degree_sequence.hpp"
#include "degsym/error.hpp"
#include "degsym/graph.hpp"
#include "degsym/harness.hpp"
#include "degsym/moments.hpp"
#include "degsym/motifs.hpp"
#include "degsym/oracle.hpp"
#include "degsym/sampler.hpp"

namespace {

using degsym::Degree;
using degsym::DegreeSequence;
using degsym::Edge;
using degsym::Errc;
using degsym::Error;
using degsym::Graph;
using degsym::Vertex;
using nlohmann::json;

constexpr int kExitError = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInvalidRows = 3;

void Print(const json& j) { std::cout << j.dump(2) << "\n"; }

DegreeSequence LoadDegrees(const std::string& path) {
  return DegreeSequence::Validate(degsym::ReadDegreeFile(path));
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParse, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Whitespace-separated "u v" pairs; '#' starts a comment.
std::vector<Edge> LoadEdgePairs(const std::string& path) {
  std::istringstream in(Slurp(path));
  std::vector<Edge> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u)) continue;
    std::string rest;
    if (!(ls >> v) || (ls >> rest)) {
      throw Error(Errc::kParse, path + ":" + std::to_string(line_no) + ": expected 'u v'");
    }
    out.push_back(Edge::Of(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  return out;
}

json EdgesJson(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

json ParamsJson(const degsym::ParamVector& p) {
  return {{"a1", p.a1},         {"a2", p.a2},
          {"a_ge3", p.a_ge3},   {"ell", p.ell},
          {"s", std::vector<std::int64_t>(p.s.begin() + 1, p.s.end())},
          {"long_cycles", p.long_cycles},
          {"long_cycle_mass", p.long_cycle_mass},
          {"k", p.k},           {"e1", p.e1},
          {"f", p.f},           {"m", p.m},
          {"h_edges", p.h_edges}};
}

json DiagnosticsJson(const degsym::ThresholdDiagnostics& d) {
  return {{"r1", d.r1},
          {"r2", d.r2},
          {"eps", d.eps},
          {"c0", d.c0},
          {"alpha1", d.alpha1},
          {"alpha2", d.alpha2},
          {"r_bounded_1", d.r_bounded_1},
          {"r_bounded_2", d.r_bounded_2},
          {"r_super_1", d.r_super_1},
          {"r_super_2", d.r_super_2},
          {"sub_growth", d.sub_growth},
          {"sub_deg1_paths", d.sub_deg1_paths},
          {"sub_deg2_paths", d.sub_deg2_paths},
          {"sub_density", {d.sub_density[0], d.sub_density[1]}},
          {"degenerate_m2", d.degenerate_m2}};
}

json EstimatesJson(const degsym::moments::MomentEstimates& m) {
  return {{"EY", m.ey},           {"EY_exact_sum", m.ey_exact_sum},
          {"EZ", m.ez},           {"EZ_exact_sum", m.ez_exact_sum},
          {"EY2fac", m.ey2fac},   {"EZ2fac", m.ez2fac},
          {"pz_y", m.pz_y},       {"pz_z", m.pz_z},
          {"pz_lower", m.pz_lower},
          {"err_m3", m.err_m3},   {"err_m4", m.err_m4}};
}

json TriplesJson(const degsym::motifs::TripleCount& t) {
  json w = json::array();
  for (const auto& x : t.witnesses) w.push_back({x.u, x.v, x.w});
  return {{"count", t.count}, {"witnesses", w}};
}

// ---------------------------------------------------------------------------

struct SampleArgs {
  std::string deg;
  std::string method = "auto";
  std::uint64_t seed = 1;
  std::int64_t count = 1;
  std::int64_t steps = 0;
  std::string out;
};

int RunSample(const SampleArgs& a) {
  const DegreeSequence d = LoadDegrees(a.deg);
  degsym::SampleMethod method;
  method.kind = degsym::ParseSampleKind(a.method);
  method.steps = a.steps;
  if (a.out.empty() && a.count != 1) {
    throw Error(Errc::kInvalidArgument, "--count > 1 requires --out DIR");
  }
  if (!a.out.empty()) std::filesystem::create_directories(a.out);
  for (std::int64_t i = 0; i < a.count; ++i) {
    const auto s = degsym::SampleDetailed(d, method, degsym::DeriveSeed(a.seed, i));
    if (a.out.empty()) {
      std::cout << degsym::FormatEdgeList(s.graph);
    } else {
      char name[64];
      std::snprintf(name, sizeof name, "sample_%06lld.edges", static_cast<long long>(i));
      degsym::WriteEdgeListFile((std::filesystem::path(a.out) / name).string(), s.graph);
    }
    if (s.approximate) {
      std::cerr << "degsym: sample " << i << " drawn by the switch chain ("
                << s.rounds << " steps, approximately uniform)\n";
    }
  }
  return 0;
}

struct AutArgs {
  std::string graph;
  std::string deg;
  bool order = false;
  double r1 = 0;
  double r2 = 0;
  std::int64_t budget = 2'000'000;
};

int RunAut(const AutArgs& a) {
  const Graph g = degsym::ReadEdgeListFile(a.graph);
  degsym::SearchOptions opts;
  opts.node_budget = a.budget;
  const auto report = degsym::FindNontrivialAutomorphism(g, opts);
  json out = {{"verdict", degsym::VerdictName(report.verdict)}, {"nodes", report.nodes}};
  out["witness"] = report.witness ? json(report.witness->ToCycleString()) : json(nullptr);
  if (a.order) out["group_order"] = degsym::GroupOrder(g, opts, g.num_vertices()).str();
  if (report.witness && a.r1 > 0 && a.r2 > 0) {
    const DegreeSequence d = a.deg.empty() ? DegreeSequence::Validate(g.DegreeArray())
                                           : LoadDegrees(a.deg);
    const auto anatomy = degsym::ParameterVector(g, *report.witness, d, a.r1, a.r2);
    out["param_vector"] = ParamsJson(anatomy.params);
    out["classification"] = degsym::SymmetryClassName(anatomy.classification);
  }
  Print(out);
  return 0;
}

struct MotifArgs {
  std::string graph;
  std::string deg;
  double alpha = 0.1;
};

int RunMotifs(const MotifArgs& a) {
  const Graph g = degsym::ReadEdgeListFile(a.graph);
  const DegreeSequence d = a.deg.empty() ? DegreeSequence::Validate(g.DegreeArray())
                                         : LoadDegrees(a.deg);
  const auto r = degsym::motifs::Analyze(g, d, a.alpha);
  json out;
  out["cherries"] = TriplesJson(r.cherries);
  out["pendant_triangles"] = TriplesJson(r.pendant_triangles);
  out["deg1"] = {{"adjacent_deg1_pairs", r.deg1.adjacent_deg1_pairs},
                 {"max_deg1_neighbors", r.deg1.max_deg1_neighbors}};
  out["min_high_on_deg1_path"] =
      r.min_high_on_deg1_path ? json(*r.min_high_on_deg1_path) : json("Infinity");
  if (r.few_high_cycle) {
    out["few_high_cycle"] = {{"cycle", r.few_high_cycle->cycle},
                             {"high_vertices", r.few_high_cycle->high_vertices}};
  } else {
    out["few_high_cycle"] = nullptr;
  }
  json comps = json::array();
  for (const auto& c : r.excess_components) {
    comps.push_back({{"component", c.component},
                     {"vertices", c.vertices},
                     {"edges", c.edges},
                     {"n1", c.n1},
                     {"n2", c.n2},
                     {"n1_below_alpha", c.n1_below_alpha},
                     {"n2_below_alpha", c.n2_below_alpha},
                     {"exact", c.exact},
                     {"excess_supports", c.excess_supports},
                     {"excess_subgraphs", c.excess_subgraphs},
                     {"density_holds", c.density_holds}});
  }
  out["excess_components"] = comps;
  Print(out);
  return 0;
}

struct MomentArgs {
  std::string deg;
  std::vector<Vertex> edge;
  std::string cond_edges;
  double c = degsym::moments::kDefaultBoundConstant;
  std::int64_t trials = 0;
  std::uint64_t seed = 1;
  int threads = 0;
};

int RunMoments(const MomentArgs& a) {
  const DegreeSequence d = LoadDegrees(a.deg);
  const auto est = degsym::moments::Estimate(d);
  json out = EstimatesJson(est);
  if (!a.edge.empty()) {
    std::vector<Edge> cond;
    if (!a.cond_edges.empty()) cond = LoadEdgePairs(a.cond_edges);
    out["edge"] = {a.edge[0], a.edge[1]};
    out["cond_edges"] = EdgesJson(cond);
    out["edge_probability"] =
        degsym::moments::ConditionalEdgeProb(d, a.edge[0], a.edge[1], cond);
    out["bound_q1"] = degsym::moments::SubgraphProbBound(d, 1, a.c);
  }
  if (a.trials > 0) {
    const auto e = degsym::harness::MomentExperiment(d, a.trials, a.seed, {}, a.threads);
    out["empirical"] = {{"trials", e.trials},
                        {"meanY", e.y.mean},
                        {"varY", e.y.variance},
                        {"seY", e.y.std_error},
                        {"meanZ", e.z.mean},
                        {"varZ", e.z.variance},
                        {"seZ", e.z.std_error},
                        {"p_Y_positive", e.y_positive.p},
                        {"approximate_samples", e.approximate_samples}};
  }
  Print(out);
  return 0;
}

struct ExactArgs {
  std::string deg;
  std::string stat;
  std::string cond_edges;
  std::int64_t max_m1 = 24;
};

int RunExact(const ExactArgs& a) {
  namespace o = degsym::oracle;
  const DegreeSequence d = LoadDegrees(a.deg);
  o::EnumerateOptions opts;
  opts.max_m1 = a.max_m1;
  const o::Realizations r = o::Enumerate(d, opts);
  json out = {{"realizations", r.count()}, {"stat", a.stat}};
  o::Rational value;
  if (a.stat == "cherries") {
    value = o::ExactExpectation(r, o::Statistic::Cherries());
  } else if (a.stat == "ptri") {
    value = o::ExactExpectation(r, o::Statistic::PendantTriangles());
  } else if (a.stat == "psym") {
    value = o::ExactPSymmetric(d, opts);
  } else if (a.stat.rfind("edge:", 0) == 0) {
    int u = 0, v = 0;
    char tail = 0;
    if (std::sscanf(a.stat.c_str() + 5, "%d,%d%c", &u, &v, &tail) != 2) {
      throw Error(Errc::kInvalidArgument, "expected edge:U,V, got " + a.stat);
    }
    if (a.cond_edges.empty()) {
      value = o::ExactExpectation(r, o::Statistic::EdgeIndicator(u, v));
    } else {
      const auto cond = LoadEdgePairs(a.cond_edges);
      value = o::ExactConditionalEdgeProbability(r, u, v, cond);
      out["cond_edges"] = EdgesJson(cond);
    }
  } else {
    throw Error(Errc::kInvalidArgument,
                "unknown statistic '" + a.stat + "' (cherries|ptri|psym|edge:U,V)");
  }
  out["value"] = o::ToString(value);
  out["decimal"] = boost::rational_cast<double>(value);
  Print(out);
  return 0;
}

struct SweepArgs {
  std::string config;
  std::string out;
  std::string log_base;
  int threads = -1;
  bool no_timing = false;
  bool quiet = false;
};

int RunSweep(const SweepArgs& a) {
  namespace h = degsym::harness;
  h::SweepConfig cfg;
  try {
    const std::string base = std::filesystem::path(a.config).parent_path().string();
    cfg = h::ParseSweepConfig(Slurp(a.config), base.empty() ? "." : base);
    if (!a.log_base.empty()) {
      if (cfg.base.kind != h::FamilyKind::kExampleGap) {
        throw Error(Errc::kConfig, "--log-base applies only to the example_gap family");
      }
      double b = 0;
      if (a.log_base != "e") {
        try {
          b = std::stod(a.log_base);
        } catch (const std::exception&) {
          b = 0;
        }
        if (!(b > 1)) throw Error(Errc::kConfig, "--log-base must be 'e' or a number > 1");
      }
      for (auto& p : cfg.points) p.family.log_base = b;
    }
  } catch (const Error& e) {
    std::cerr << "degsym: config error: " << e.what() << "\n";
    return kExitConfig;
  }
  for (const auto& w : cfg.warnings) std::cerr << "degsym: warning: " << w << "\n";
  if (a.threads >= 0) cfg.options.threads = a.threads;
  if (a.no_timing) cfg.options.record_time = false;
  const auto rows = h::Sweep(cfg, a.quiet ? nullptr : &std::cerr);
  const std::string csv = h::FormatCsv(rows);
  const std::string out = a.out.empty() ? cfg.out : a.out;
  if (out.empty() || out == "-") {
    std::cout << csv;
  } else {
    std::ofstream f(out);
    if (!f) throw Error(Errc::kInvalidArgument, "cannot write " + out);
    f << csv;
  }
  for (const auto& r : rows) {
    if (r.invalid()) return kExitInvalidRows;
  }
  return 0;
}

struct DiagArgs {
  std::string deg;
  double r1 = 10;
  double r2 = 10;
  double eps = 0.5;
};

int RunDiag(const DiagArgs& a) {
  const DegreeSequence d = LoadDegrees(a.deg);
  const auto& s = d.stats();
  json out = {{"n", s.n},
              {"n1", s.n1},
              {"n2", s.n2},
              {"max_degree", s.max_degree},
              {"M1", degsym::WideToString(s.M(1))},
              {"M2", degsym::WideToString(s.M(2))},
              {"M3", degsym::WideToString(s.M(3))},
              {"M4", degsym::WideToString(s.M(4))},
              {"pairing_acceptance", degsym::PairingAcceptanceEstimate(d)}};
  out["diagnostics"] = DiagnosticsJson(degsym::Diagnostics(d, a.r1, a.r2, a.eps));
  Print(out);
  return 0;
}

int RunCalibrate() {
  const auto corpus = degsym::oracle::StandardCorpus();
  const auto cal = degsym::oracle::CalibrateEdgeBound(corpus);
  Print({{"corpus_size", corpus.size()},
         {"constant", cal.constant},
         {"subgraphs_checked", cal.subgraphs_checked},
         {"worst_sequence", cal.worst_sequence},
         {"worst_subgraph", EdgesJson(cal.worst_subgraph)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random graphs with a given degree sequence: sampling, symmetry and motifs"};
  app.require_subcommand(1);

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "Draw graphs with a prescribed degree sequence");
  s->add_option("--deg", sample.deg, "Degree file")->required()->check(CLI::ExistingFile);
  s->add_option("--method", sample.method, "auto|rejection|switch");
  s->add_option("--seed", sample.seed, "Master seed");
  s->add_option("--count", sample.count, "Number of samples")->check(CLI::PositiveNumber);
  s->add_option("--steps", sample.steps, "Switch-chain steps (0: 20*M1)");
  s->add_option("--out", sample.out, "Output directory (one edge-list file per sample)");

  AutArgs aut;
  auto* a = app.add_subcommand("aut", "Search for a non-trivial automorphism");
  a->add_option("--graph", aut.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  a->add_option("--deg", aut.deg, "Degree file (default: the graph's degrees)");
  a->add_flag("--order", aut.order, "Also compute |Aut(G)|");
  a->add_option("--r1", aut.r1, "R1 for the parameter vector");
  a->add_option("--r2", aut.r2, "R2 for the parameter vector");
  a->add_option("--budget", aut.budget, "Search node budget");

  MotifArgs mot;
  auto* m = app.add_subcommand("motifs", "Report cherries, pendant triangles and structure");
  m->add_option("--graph", mot.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  m->add_option("--deg", mot.deg, "Degree file (default: the graph's degrees)");
  m->add_option("--alpha", mot.alpha, "Density threshold for excess subgraphs");

  MomentArgs mom;
  auto* mo = app.add_subcommand("moments", "Closed-form moment estimates");
  mo->add_option("--deg", mom.deg, "Degree file")->required()->check(CLI::ExistingFile);
  mo->add_option("--edge", mom.edge, "Edge u v for the conditional probability")
      ->expected(2);
  mo->add_option("--cond-edges", mom.cond_edges, "File of conditioning edges 'u v'");
  mo->add_option("--c", mom.c, "Constant for the subgraph probability bound");
  mo->add_option("--trials", mom.trials, "Also run an empirical moment experiment");
  mo->add_option("--seed", mom.seed, "Seed for --trials");
  mo->add_option("--threads", mom.threads, "Worker threads (0: all cores)");

  ExactArgs ex;
  auto* e = app.add_subcommand("exact", "Exact values by enumerating all realizations");
  e->add_option("--deg", ex.deg, "Degree file")->required()->check(CLI::ExistingFile);
  e->add_option("--stat", ex.stat, "cherries|ptri|psym|edge:U,V")->required();
  e->add_option("--cond-edges", ex.cond_edges, "Conditioning edges for edge:U,V");
  e->add_option("--max-m1", ex.max_m1, "Largest degree sum to enumerate");

  SweepArgs sw;
  auto* w = app.add_subcommand("sweep", "Monte Carlo sweep from a JSON config; writes CSV");
  w->add_option("--config", sw.config, "Sweep config")->required();
  w->add_option("--out", sw.out, "CSV path ('-' for stdout); overrides the config");
  w->add_option("--threads", sw.threads, "Worker threads (0: all cores)");
  w->add_option("--log-base", sw.log_base, "example_gap logarithm base: e or a number");
  w->add_flag("--no-timing", sw.no_timing, "Write 0 in the seconds column");
  w->add_flag("--quiet", sw.quiet, "No progress on stderr");

  DiagArgs dg;
  auto* di = app.add_subcommand("diag", "Degree statistics and threshold diagnostics");
  di->add_option("--deg", dg.deg, "Degree file")->required()->check(CLI::ExistingFile);
  di->add_option("--r1", dg.r1, "R1");
  di->add_option("--r2", dg.r2, "R2");
  di->add_option("--eps", dg.eps, "epsilon");

  app.add_subcommand("calibrate", "Calibrate the subgraph bound constant on the small corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  }

  try {
    if (*s) return RunSample(sample);
    if (*a) return RunAut(aut);
    if (*m) return RunMotifs(mot);
    if (*mo) return RunMoments(mom);
    if (*e) return RunExact(ex);
    if (*w) {
      if (!std::filesystem::exists(sw.config)) {
        std::cerr << "degsym: config error: cannot open " << sw.config << "\n";
        return kExitConfig;
      }
      return RunSweep(sw);
    }
    if (*di) return RunDiag(dg);
    return RunCalibrate();
  } catch (const std::exception& err) {
    std::cerr << "degsym: error: " << err.what() << "\n";
    return kExitError;
  }
}
