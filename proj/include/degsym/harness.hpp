#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "degsym/automorphism.hpp"
#include "degsym/degree_sequence.hpp"
#include "degsym/moments.hpp"
#include "degsym/sampler.hpp"

namespace degsym::harness {

enum class FamilyKind { kBounded, kExampleGap, kRegular, kCustom };

std::string FamilyKindName(FamilyKind kind);  // bounded|example_gap|regular|custom
FamilyKind ParseFamilyKind(const std::string& name);

// Degree-sequence families indexed by n.
//   bounded:     ceil(c n^beta) degree-1, ceil(c2 n^beta2) degree-2 vertices
//                (a coefficient of 0 gives none), the rest degree `delta`.
//   example_gap: ceil(n^beta) degree-1 vertices, the rest ceil(log_b n).
//   regular:     every vertex degree `degree`.
//   custom:      a fixed sequence; only its own length is a valid n.
struct Family {
  FamilyKind kind = FamilyKind::kRegular;
  Degree delta = 3;
  double c = 0;
  double beta = 0.5;
  double c2 = 0;
  double beta2 = 0.5;
  double gap_beta = 0.55;
  double log_base = 0;  // 0 selects the natural logarithm
  Degree degree = 3;
  std::vector<Degree> custom;
  std::string custom_label;

  // "key=value;..." in a fixed key order, e.g. "delta=3;c=0.5;beta=0.5;...".
  std::string Params() const;
};

struct Instance {
  std::vector<Degree> degrees;
  bool parity_adjusted = false;  // one filler vertex raised by 1
};

// Throws Error{kConfig} for an n the family cannot be built at; the
// returned sequence may still be rejected by DegreeSequence::Validate.
Instance Instantiate(const Family& family, std::int64_t n);

struct Proportion {
  std::int64_t hits = 0;
  std::int64_t trials = 0;
  double p = 0;
  double lo = 0;
  double hi = 1;
};

// Wilson score interval; z = 1.96 gives 95%.
Proportion Wilson(std::int64_t hits, std::int64_t trials, double z = 1.959963984540054);

struct PointOptions {
  std::int64_t trials = 100;
  std::uint64_t seed = 1;
  SampleMethod method;
  std::int64_t aut_budget = 2'000'000;
  int threads = 0;  // 0: hardware concurrency
  bool record_time = true;
};

struct ExperimentRow {
  std::string family;
  std::string params;
  std::int64_t n = 0;
  std::int64_t trials = 0;
  std::int64_t unknowns = 0;
  Proportion sym;   // over trials whose verdict is known
  Proportion conn;
  double mean_y = 0;
  double var_y = 0;
  double ey_pred = 0;  // exact-sum form
  double mean_z = 0;
  double var_z = 0;
  double ez_pred = 0;  // exact-sum form
  double pz_lower = 0;
  ThresholdDiagnostics diag;
  double seconds = 0;

  // Not part of the CSV columns.
  bool parity_adjusted = false;
  std::int64_t approximate_samples = 0;  // drawn by the switch chain
  std::int64_t motif_samples = 0;        // cherry or pendant triangle present
  std::int64_t no_adjacent_deg1 = 0;
  std::int64_t deg1_neighbors_le2 = 0;  // no vertex with >= 3 leaf neighbors
  std::int64_t y_positive = 0;

  // More than 1% of trials ended with an unknown verdict.
  bool invalid() const { return unknowns * 100 > trials; }
};

// Trial i uses stream DeriveSeed(options.seed, i); results do not depend on
// the thread count.
ExperimentRow RunPoint(const Family& family, std::int64_t n,
                       const PointOptions& options);

// Same, for an explicit sequence.
ExperimentRow RunSequence(const DegreeSequence& d, const PointOptions& options);

struct Moment {
  double mean = 0;
  double variance = 0;
  double std_error = 0;
};

struct MomentExperimentResult {
  std::int64_t trials = 0;
  Moment y;
  Moment z;
  Proportion y_positive;
  double y_positive_se = 0;
  moments::MomentEstimates predicted;
  std::int64_t approximate_samples = 0;
};

MomentExperimentResult MomentExperiment(const DegreeSequence& d,
                                        std::int64_t trials, std::uint64_t seed,
                                        const SampleMethod& method = {},
                                        int threads = 0);

struct SweepPoint {
  Family family;
  std::int64_t n = 0;
};

struct SweepConfig {
  Family base;
  std::vector<SweepPoint> points;  // cross product, deduplicated
  PointOptions options;
  std::string out;
  std::vector<std::string> warnings;
};

// Parses the JSON sweep configuration. Throws Error{kConfig} with the line
// and field of the first violation. `base_dir` resolves a relative custom
// file path.
SweepConfig ParseSweepConfig(const std::string& text,
                             const std::string& base_dir = ".");

// Per-point seed: the master seed mixed with the point's params and n, so a
// point's row does not depend on its position in the sweep.
std::uint64_t PointSeed(std::uint64_t master, const SweepPoint& point);

std::vector<ExperimentRow> Sweep(const SweepConfig& config,
                                 std::ostream* progress = nullptr);

inline constexpr const char* kCsvSchema = "degsym-sweep/1";
std::string CsvHeader();
std::string CsvLine(const ExperimentRow& row);
// Schema line, header, one line per row, then '#' note lines for rows that
// are approximate, parity-adjusted or invalid.
std::string FormatCsv(const std::vector<ExperimentRow>& rows);

}  // namespace degsym::harness
