#include "degsym/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "degsym/error.hpp"
#include "degsym/graph.hpp"
#include "degsym/motifs.hpp"
#include "degsym/permutation.hpp"
#include "degsym/rng.hpp"

namespace degsym::harness {
namespace {

std::string Num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::int64_t CeilPow(double c, double n, double beta) {
  if (c == 0) return 0;
  // Guard against values like 10^2 landing on 100.00000000000001.
  const double x = c * std::pow(n, beta);
  const double r = std::round(x);
  if (std::abs(x - r) < 1e-9 * std::max(1.0, r)) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::ceil(x));
}

struct TrialOutcome {
  Verdict verdict = Verdict::kUnknown;
  bool connected = false;
  bool approximate = false;
  std::int64_t y = 0;
  std::int64_t z = 0;
  std::int64_t adjacent_deg1 = 0;
  std::int64_t max_deg1_neighbors = 0;
};

// Runs body(i) for i in [0, count) on `threads` workers; each index is
// handled exactly once and results go to caller-owned slots.
template <typename Body>
void ParallelFor(std::int64_t count, int threads, const Body& body) {
  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = static_cast<int>(std::min<std::int64_t>(threads, std::max<std::int64_t>(count, 1)));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    while (true) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

TrialOutcome RunTrial(const DegreeSequence& d, const PointOptions& options,
                      std::uint64_t seed) {
  const SampleResult s = SampleDetailed(d, options.method, seed);
  const Graph& g = s.graph;
  TrialOutcome out;
  out.approximate = s.approximate;
  SearchOptions search;
  search.node_budget = options.aut_budget;
  const AutReport report = FindNontrivialAutomorphism(g, search);
  out.verdict = report.verdict;
  if (report.verdict == Verdict::kNontrivial &&
      !IsAutomorphism(g, *report.witness)) {
    throw Error(Errc::kNotAnAutomorphism,
                "search returned an invalid witness " + report.witness->ToCycleString());
  }
  out.connected = IsConnected(g);
  out.y = motifs::CountCherries(g, d, false).count;
  out.z = motifs::CountPendantTriangles(g, d, false).count;
  const auto deg1 = motifs::Deg1(g, d);
  out.adjacent_deg1 = deg1.adjacent_deg1_pairs;
  out.max_deg1_neighbors = deg1.max_deg1_neighbors;
  return out;
}

Moment Summarize(std::int64_t sum, std::int64_t sum_sq, std::int64_t trials) {
  Moment m;
  const double t = static_cast<double>(trials);
  m.mean = static_cast<double>(sum) / t;
  if (trials > 1) {
    const double ss = static_cast<double>(sum_sq) - static_cast<double>(sum) * m.mean;
    m.variance = std::max(0.0, ss / (t - 1));
  }
  m.std_error = std::sqrt(m.variance / t);
  return m;
}

std::uint64_t Fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string FamilyKindName(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kBounded: return "bounded";
    case FamilyKind::kExampleGap: return "example_gap";
    case FamilyKind::kRegular: return "regular";
    case FamilyKind::kCustom: return "custom";
  }
  return "custom";
}

FamilyKind ParseFamilyKind(const std::string& name) {
  if (name == "bounded") return FamilyKind::kBounded;
  if (name == "example_gap") return FamilyKind::kExampleGap;
  if (name == "regular") return FamilyKind::kRegular;
  if (name == "custom") return FamilyKind::kCustom;
  throw Error(Errc::kConfig, "unknown family '" + name +
                                 "' (bounded|example_gap|regular|custom)");
}

std::string Family::Params() const {
  switch (kind) {
    case FamilyKind::kBounded:
      return "delta=" + std::to_string(delta) + ";c=" + Num(c) + ";beta=" + Num(beta) +
             ";c2=" + Num(c2) + ";beta2=" + Num(beta2);
    case FamilyKind::kExampleGap:
      return "beta=" + Num(gap_beta) + ";log_base=" + (log_base == 0 ? "e" : Num(log_base));
    case FamilyKind::kRegular:
      return "degree=" + std::to_string(degree);
    case FamilyKind::kCustom:
      return "file=" + custom_label;
  }
  return "";
}

Instance Instantiate(const Family& family, std::int64_t n) {
  if (n < 1) throw Error(Errc::kConfig, "n must be positive");
  Instance out;
  const double nd = static_cast<double>(n);
  // Filler vertices start at index `filler`; parity fix raises the last one.
  std::size_t filler = 0;
  switch (family.kind) {
    case FamilyKind::kBounded: {
      const std::int64_t n1 = CeilPow(family.c, nd, family.beta);
      const std::int64_t n2 = CeilPow(family.c2, nd, family.beta2);
      if (n1 + n2 > n) {
        throw Error(Errc::kConfig, "n1 + n2 exceeds n = " + std::to_string(n) +
                                       " for " + family.Params());
      }
      out.degrees.assign(static_cast<std::size_t>(n1), 1);
      out.degrees.insert(out.degrees.end(), static_cast<std::size_t>(n2), 2);
      filler = out.degrees.size();
      out.degrees.resize(static_cast<std::size_t>(n), family.delta);
      break;
    }
    case FamilyKind::kExampleGap: {
      const std::int64_t n1 = std::min<std::int64_t>(CeilPow(1, nd, family.gap_beta), n);
      const double log_n = family.log_base == 0
                               ? std::log(nd)
                               : std::log(nd) / std::log(family.log_base);
      const auto high = static_cast<Degree>(std::ceil(log_n - 1e-12));
      out.degrees.assign(static_cast<std::size_t>(n1), 1);
      filler = out.degrees.size();
      out.degrees.resize(static_cast<std::size_t>(n), std::max<Degree>(high, 1));
      break;
    }
    case FamilyKind::kRegular:
      out.degrees.assign(static_cast<std::size_t>(n), family.degree);
      break;
    case FamilyKind::kCustom:
      if (static_cast<std::int64_t>(family.custom.size()) != n) {
        throw Error(Errc::kConfig, "custom sequence has length " +
                                       std::to_string(family.custom.size()) +
                                       ", not n = " + std::to_string(n));
      }
      out.degrees = family.custom;
      return out;
  }
  std::int64_t sum = 0;
  for (Degree x : out.degrees) sum += x;
  if (sum % 2 != 0) {
    if (filler >= out.degrees.size()) {
      throw Error(Errc::kConfig, "odd degree sum with no filler vertex to adjust");
    }
    ++out.degrees.back();
    out.parity_adjusted = true;
  }
  return out;
}

Proportion Wilson(std::int64_t hits, std::int64_t trials, double z) {
  Proportion out;
  out.hits = hits;
  out.trials = trials;
  if (trials <= 0) return out;
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / t;
  const double z2 = z * z;
  const double denom = 1 + z2 / t;
  const double center = (p + z2 / (2 * t)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / t + z2 / (4 * t * t)) / denom;
  out.p = p;
  out.lo = std::max(0.0, std::min(p, center - half));
  out.hi = std::min(1.0, std::max(p, center + half));
  return out;
}

ExperimentRow RunSequence(const DegreeSequence& d, const PointOptions& options) {
  if (options.trials < 1) throw Error(Errc::kConfig, "trials must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(options.trials));
  ParallelFor(options.trials, options.threads, [&](std::int64_t i) {
    outcomes[static_cast<std::size_t>(i)] =
        RunTrial(d, options, DeriveSeed(options.seed, static_cast<std::uint64_t>(i)));
  });

  ExperimentRow row;
  row.n = static_cast<std::int64_t>(d.size());
  row.trials = options.trials;
  std::int64_t sym = 0;
  std::int64_t conn = 0;
  std::int64_t y = 0, y2 = 0, z = 0, z2 = 0;
  for (const TrialOutcome& o : outcomes) {
    row.unknowns += o.verdict == Verdict::kUnknown;
    sym += o.verdict == Verdict::kNontrivial;
    conn += o.connected;
    y += o.y;
    y2 += o.y * o.y;
    z += o.z;
    z2 += o.z * o.z;
    row.approximate_samples += o.approximate;
    row.motif_samples += (o.y + o.z) > 0;
    row.no_adjacent_deg1 += o.adjacent_deg1 == 0;
    row.deg1_neighbors_le2 += o.max_deg1_neighbors <= 2;
    row.y_positive += o.y > 0;
  }
  row.sym = Wilson(sym, options.trials - row.unknowns);
  row.conn = Wilson(conn, options.trials);
  const Moment my = Summarize(y, y2, options.trials);
  const Moment mz = Summarize(z, z2, options.trials);
  row.mean_y = my.mean;
  row.var_y = my.variance;
  row.mean_z = mz.mean;
  row.var_z = mz.variance;
  const auto est = moments::Estimate(d);
  row.ey_pred = est.ey_exact_sum;
  row.ez_pred = est.ez_exact_sum;
  row.pz_lower = est.pz_lower;
  row.diag = Diagnostics(d, 10, 10, 0.5);
  if (options.record_time) {
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
  }
  return row;
}

ExperimentRow RunPoint(const Family& family, std::int64_t n,
                       const PointOptions& options) {
  const Instance inst = Instantiate(family, n);
  const DegreeSequence d = DegreeSequence::Validate(inst.degrees);
  ExperimentRow row = RunSequence(d, options);
  row.family = FamilyKindName(family.kind);
  row.params = family.Params();
  row.parity_adjusted = inst.parity_adjusted;
  return row;
}

MomentExperimentResult MomentExperiment(const DegreeSequence& d,
                                        std::int64_t trials, std::uint64_t seed,
                                        const SampleMethod& method, int threads) {
  if (trials < 1) throw Error(Errc::kInvalidArgument, "trials must be >= 1");
  struct Counts {
    std::int64_t y = 0;
    std::int64_t z = 0;
    bool approximate = false;
  };
  std::vector<Counts> counts(static_cast<std::size_t>(trials));
  ParallelFor(trials, threads, [&](std::int64_t i) {
    const SampleResult s =
        SampleDetailed(d, method, DeriveSeed(seed, static_cast<std::uint64_t>(i)));
    auto& c = counts[static_cast<std::size_t>(i)];
    c.y = motifs::CountCherries(s.graph, d, false).count;
    c.z = motifs::CountPendantTriangles(s.graph, d, false).count;
    c.approximate = s.approximate;
  });
  MomentExperimentResult out;
  out.trials = trials;
  std::int64_t y = 0, y2 = 0, z = 0, z2 = 0, pos = 0;
  for (const Counts& c : counts) {
    y += c.y;
    y2 += c.y * c.y;
    z += c.z;
    z2 += c.z * c.z;
    pos += c.y > 0;
    out.approximate_samples += c.approximate;
  }
  out.y = Summarize(y, y2, trials);
  out.z = Summarize(z, z2, trials);
  out.y_positive = Wilson(pos, trials);
  out.y_positive_se = std::sqrt(out.y_positive.p * (1 - out.y_positive.p) /
                                static_cast<double>(trials));
  out.predicted = moments::Estimate(d);
  return out;
}

// ---------------------------------------------------------------------------
// Sweep configuration

namespace {

using nlohmann::json;

class ConfigReader {
 public:
  explicit ConfigReader(const std::string& text) : text_(text) {}

  [[noreturn]] void Fail(const std::string& field, const std::string& what) const {
    throw Error(Errc::kConfig, "line " + std::to_string(LineOf(field)) + ", field '" +
                                   field + "': " + what);
  }

  // Line of the first occurrence of the field's last key in the source.
  int LineOf(const std::string& field) const {
    std::string key = field;
    if (const auto dot = key.rfind('.'); dot != std::string::npos) key = key.substr(dot + 1);
    if (const auto br = key.find('['); br != std::string::npos) key = key.substr(0, br);
    const auto at = text_.find("\"" + key + "\"");
    if (at == std::string::npos) return 1;
    return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() +
                                               static_cast<std::ptrdiff_t>(at), '\n'));
  }

  int LineOfByte(std::size_t byte) const {
    byte = std::min(byte, text_.size());
    return 1 + static_cast<int>(std::count(text_.begin(),
                                           text_.begin() + static_cast<std::ptrdiff_t>(byte),
                                           '\n'));
  }

  double Number(const json& v, const std::string& field) const {
    if (!v.is_number()) Fail(field, "expected a number");
    return v.get<double>();
  }

  std::int64_t Integer(const json& v, const std::string& field, std::int64_t min) const {
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
      Fail(field, "expected an integer");
    }
    const auto x = v.get<std::int64_t>();
    if (x < min) Fail(field, "must be >= " + std::to_string(min));
    return x;
  }

  // A scalar or a non-empty array of scalars.
  std::vector<json> Values(const json& v, const std::string& field) const {
    if (!v.is_array()) return {v};
    if (v.empty()) Fail(field, "empty parameter list");
    return std::vector<json>(v.begin(), v.end());
  }

 private:
  const std::string& text_;
};

}  // namespace

SweepConfig ParseSweepConfig(const std::string& text, const std::string& base_dir) {
  ConfigReader r(text);
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::kConfig, "line " + std::to_string(r.LineOfByte(e.byte)) +
                                   ": invalid JSON (" + e.what() + ")");
  }
  if (!root.is_object()) throw Error(Errc::kConfig, "line 1: top level must be an object");

  static const std::set<std::string> kTop = {"family", "params", "n_list", "trials",
                                             "seed", "method", "aut_budget", "out",
                                             "threads", "record_time", "steps",
                                             "rejection_budget"};
  for (const auto& [key, value] : root.items()) {
    if (!kTop.count(key)) r.Fail(key, "unknown field");
  }
  for (const char* required : {"family", "n_list", "trials", "seed"}) {
    if (!root.contains(required)) {
      throw Error(Errc::kConfig, std::string("line 1, field '") + required +
                                     "': missing required field");
    }
  }

  SweepConfig cfg;
  if (!root["family"].is_string()) r.Fail("family", "expected a string");
  try {
    cfg.base.kind = ParseFamilyKind(root["family"].get<std::string>());
  } catch (const Error& e) {
    r.Fail("family", e.what());
  }

  // n_list
  const json& nl = root["n_list"];
  if (!nl.is_array()) r.Fail("n_list", "expected an array of positive integers");
  std::vector<std::int64_t> ns;
  for (std::size_t i = 0; i < nl.size(); ++i) {
    ns.push_back(r.Integer(nl[i], "n_list[" + std::to_string(i) + "]", 1));
  }

  cfg.options.trials = r.Integer(root["trials"], "trials", 1);
  cfg.options.seed = static_cast<std::uint64_t>(r.Integer(root["seed"], "seed", 0));
  if (root.contains("method")) {
    if (!root["method"].is_string()) r.Fail("method", "expected a string");
    try {
      cfg.options.method.kind = ParseSampleKind(root["method"].get<std::string>());
    } catch (const Error& e) {
      r.Fail("method", e.what());
    }
  }
  if (root.contains("steps")) cfg.options.method.steps = r.Integer(root["steps"], "steps", 1);
  if (root.contains("rejection_budget")) {
    cfg.options.method.rejection_budget =
        r.Integer(root["rejection_budget"], "rejection_budget", 1);
  }
  if (root.contains("aut_budget")) {
    cfg.options.aut_budget = r.Integer(root["aut_budget"], "aut_budget", 1);
  }
  if (root.contains("threads")) {
    cfg.options.threads = static_cast<int>(r.Integer(root["threads"], "threads", 0));
  }
  if (root.contains("record_time")) {
    if (!root["record_time"].is_boolean()) r.Fail("record_time", "expected true or false");
    cfg.options.record_time = root["record_time"].get<bool>();
  }
  if (root.contains("out")) {
    if (!root["out"].is_string()) r.Fail("out", "expected a string");
    cfg.out = root["out"].get<std::string>();
  }

  // params: each key maps to a scalar or an array (expanded as a product).
  json params = root.contains("params") ? root["params"] : json::object();
  if (!params.is_object()) r.Fail("params", "expected an object");
  std::vector<std::string> keys;
  switch (cfg.base.kind) {
    case FamilyKind::kBounded: keys = {"delta", "c", "beta", "c2", "beta2"}; break;
    case FamilyKind::kExampleGap: keys = {"beta", "log_base"}; break;
    case FamilyKind::kRegular: keys = {"degree"}; break;
    case FamilyKind::kCustom: keys = {"file", "degrees"}; break;
  }
  for (const auto& [key, value] : params.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      r.Fail("params." + key, "unknown parameter for family " +
                                  FamilyKindName(cfg.base.kind));
    }
  }

  std::vector<Family> families{cfg.base};
  auto expand = [&](const std::string& key,
                    const std::function<void(Family&, const json&, const std::string&)>& set) {
    if (!params.contains(key)) return;
    const auto values = r.Values(params[key], "params." + key);
    std::vector<Family> next;
    for (const Family& f : families) {
      for (std::size_t i = 0; i < values.size(); ++i) {
        Family g = f;
        const std::string field = params[key].is_array()
                                      ? "params." + key + "[" + std::to_string(i) + "]"
                                      : "params." + key;
        set(g, values[i], field);
        next.push_back(std::move(g));
      }
    }
    families = std::move(next);
  };

  switch (cfg.base.kind) {
    case FamilyKind::kBounded:
      expand("delta", [&](Family& f, const json& v, const std::string& field) {
        f.delta = static_cast<Degree>(r.Integer(v, field, 1));
      });
      expand("c", [&](Family& f, const json& v, const std::string& field) {
        f.c = r.Number(v, field);
        if (f.c < 0) r.Fail(field, "must be >= 0");
      });
      expand("beta", [&](Family& f, const json& v, const std::string& field) {
        f.beta = r.Number(v, field);
        if (f.beta < 0 || f.beta > 1) r.Fail(field, "must lie in [0, 1]");
      });
      expand("c2", [&](Family& f, const json& v, const std::string& field) {
        f.c2 = r.Number(v, field);
        if (f.c2 < 0) r.Fail(field, "must be >= 0");
      });
      expand("beta2", [&](Family& f, const json& v, const std::string& field) {
        f.beta2 = r.Number(v, field);
        if (f.beta2 < 0 || f.beta2 > 1) r.Fail(field, "must lie in [0, 1]");
      });
      break;
    case FamilyKind::kExampleGap:
      expand("beta", [&](Family& f, const json& v, const std::string& field) {
        f.gap_beta = r.Number(v, field);
        if (!(f.gap_beta > 0 && f.gap_beta < 1)) r.Fail(field, "must lie in (0, 1)");
      });
      expand("log_base", [&](Family& f, const json& v, const std::string& field) {
        if (v.is_string()) {
          if (v.get<std::string>() != "e") r.Fail(field, "expected \"e\" or a number > 1");
          f.log_base = 0;
        } else {
          f.log_base = r.Number(v, field);
          if (!(f.log_base > 1)) r.Fail(field, "must be > 1");
        }
      });
      break;
    case FamilyKind::kRegular:
      expand("degree", [&](Family& f, const json& v, const std::string& field) {
        f.degree = static_cast<Degree>(r.Integer(v, field, 1));
      });
      break;
    case FamilyKind::kCustom: {
      Family& f = families[0];
      if (params.contains("file") == params.contains("degrees")) {
        r.Fail("params", "custom family needs exactly one of 'file' or 'degrees'");
      }
      if (params.contains("file")) {
        if (!params["file"].is_string()) r.Fail("params.file", "expected a string");
        std::filesystem::path p = params["file"].get<std::string>();
        f.custom_label = p.string();
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        try {
          f.custom = ReadDegreeFile(p.string());
        } catch (const Error& e) {
          r.Fail("params.file", e.what());
        }
      } else {
        const json& arr = params["degrees"];
        if (!arr.is_array() || arr.empty()) r.Fail("params.degrees", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
          f.custom.push_back(static_cast<Degree>(
              r.Integer(arr[i], "params.degrees[" + std::to_string(i) + "]", 0)));
        }
        f.custom_label = "inline";
      }
      break;
    }
  }

  std::set<std::pair<std::string, std::int64_t>> seen;
  for (const Family& f : families) {
    for (std::int64_t n : ns) {
      if (!seen.insert({f.Params(), n}).second) {
        cfg.warnings.push_back("duplicate sweep point (" + f.Params() + ", n=" +
                               std::to_string(n) + ") ignored");
        continue;
      }
      cfg.points.push_back({f, n});
    }
  }
  return cfg;
}

std::uint64_t PointSeed(std::uint64_t master, const SweepPoint& point) {
  const std::string key = FamilyKindName(point.family.kind) + "|" +
                          point.family.Params() + "|" + std::to_string(point.n);
  return DeriveSeed(master, Fnv1a(key));
}

std::vector<ExperimentRow> Sweep(const SweepConfig& config, std::ostream* progress) {
  std::vector<ExperimentRow> rows;
  for (const SweepPoint& point : config.points) {
    PointOptions options = config.options;
    options.seed = PointSeed(config.options.seed, point);
    rows.push_back(RunPoint(point.family, point.n, options));
    if (progress) {
      const auto& r = rows.back();
      *progress << r.family << " " << r.params << " n=" << r.n
                << " p_sym=" << Num(r.sym.p) << " p_conn=" << Num(r.conn.p)
                << " unknowns=" << r.unknowns << "\n";
    }
  }
  return rows;
}

std::string CsvHeader() {
  return "family,params,n,trials,unknowns,p_sym,p_sym_lo,p_sym_hi,p_conn,p_conn_lo,"
         "p_conn_hi,meanY,varY,EY_pred,meanZ,varZ,EZ_pred,pz_lower,r_bounded_1,"
         "r_bounded_2,r_super_1,r_super_2,seconds";
}

std::string CsvLine(const ExperimentRow& r) {
  std::ostringstream out;
  out << r.family << ',' << r.params << ',' << r.n << ',' << r.trials << ','
      << r.unknowns;
  for (double x : {r.sym.p, r.sym.lo, r.sym.hi, r.conn.p, r.conn.lo, r.conn.hi,
                   r.mean_y, r.var_y, r.ey_pred, r.mean_z, r.var_z, r.ez_pred,
                   r.pz_lower, r.diag.r_bounded_1, r.diag.r_bounded_2,
                   r.diag.r_super_1, r.diag.r_super_2, r.seconds}) {
    out << ',' << Num(x);
  }
  return out.str();
}

std::string FormatCsv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "# schema=" << kCsvSchema << "\n" << CsvHeader() << "\n";
  for (const auto& r : rows) out << CsvLine(r) << "\n";
  for (const auto& r : rows) {
    const std::string where = r.family + " " + r.params + " n=" + std::to_string(r.n);
    if (r.approximate_samples > 0) {
      out << "# approximate: " << where << " (" << r.approximate_samples
          << " samples from the switch chain)\n";
    }
    if (r.parity_adjusted) out << "# parity_adjusted: " << where << "\n";
    if (r.invalid()) out << "# invalid: " << where << " (" << r.unknowns << " unknown verdicts)\n";
  }
  return out.str();
}

}  // namespace degsym::harness
