#include "degsym/harness.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "degsym/error.hpp"
#include "support/test_support.hpp"

namespace degsym::harness {
namespace {

using testing::Seq;

TEST(Wilson, MatchesHandComputedInterval) {
  // 50/100 at z=1.96: center 0.5, half-width 1.96*sqrt(0.0025+0.000096)/1.0384.
  const Proportion w = Wilson(50, 100);
  const double z = 1.959963984540054;
  const double half = z * std::sqrt(0.25 / 100 + z * z / 40000) / (1 + z * z / 100);
  EXPECT_DOUBLE_EQ(w.p, 0.5);
  EXPECT_NEAR(w.lo, 0.5 - half, 1e-12);
  EXPECT_NEAR(w.hi, 0.5 + half, 1e-12);
}

TEST(Wilson, EdgeCases) {
  const Proportion zero = Wilson(0, 20);
  EXPECT_EQ(zero.lo, 0);
  EXPECT_GT(zero.hi, 0.1);
  const Proportion all = Wilson(20, 20);
  EXPECT_EQ(all.hi, 1);
  EXPECT_LT(all.lo, 0.9);
  const Proportion none = Wilson(0, 0);
  EXPECT_EQ(none.lo, 0);
  EXPECT_EQ(none.hi, 1);
}

TEST(Families, BoundedCounts) {
  Family f;
  f.kind = FamilyKind::kBounded;
  f.c = 1;
  f.beta = 0.5;
  f.delta = 3;
  const Instance inst = Instantiate(f, 100);
  ASSERT_EQ(inst.degrees.size(), 100u);
  EXPECT_EQ(std::count(inst.degrees.begin(), inst.degrees.end(), 1), 10);
  // 10 + 90*3 = 280 is even.
  EXPECT_FALSE(inst.parity_adjusted);
  EXPECT_EQ(f.Params(), "delta=3;c=1;beta=0.5;c2=0;beta2=0.5");
}

TEST(Families, ParityAdjustment) {
  Family f;
  f.kind = FamilyKind::kBounded;
  f.c = 1;
  f.beta = 0.5;
  const Instance inst = Instantiate(f, 101);  // 11 ones + 90 threes: odd
  EXPECT_TRUE(inst.parity_adjusted);
  std::int64_t sum = 0;
  for (Degree x : inst.degrees) sum += x;
  EXPECT_EQ(sum % 2, 0);
  EXPECT_EQ(inst.degrees.back(), 4);
}

TEST(Families, ExampleGap) {
  Family f;
  f.kind = FamilyKind::kExampleGap;
  f.gap_beta = 0.55;
  const Instance inst = Instantiate(f, 10000);
  // ceil(10^2.2) = 159 leaves, ceil(ln 10^4) = 10 elsewhere; odd sum.
  EXPECT_EQ(std::count(inst.degrees.begin(), inst.degrees.end(), 1), 159);
  EXPECT_EQ(std::count(inst.degrees.begin(), inst.degrees.end(), 10), 9840);
  EXPECT_TRUE(inst.parity_adjusted);
  f.log_base = 2;
  const Instance b2 = Instantiate(f, 10000);
  EXPECT_EQ(b2.degrees[200], 14);
}

TEST(Families, RegularAndCustom) {
  Family r;
  r.kind = FamilyKind::kRegular;
  r.degree = 3;
  EXPECT_TRUE(Instantiate(r, 5).parity_adjusted);
  Family c;
  c.kind = FamilyKind::kCustom;
  c.custom = {2, 2, 2};
  EXPECT_EQ(Instantiate(c, 3).degrees, (std::vector<Degree>{2, 2, 2}));
  EXPECT_THROW(Instantiate(c, 4), Error);
}

TEST(RunSequence, TriangleIsAlwaysSymmetric) {
  PointOptions o;
  o.trials = 20;
  o.seed = 5;
  const ExperimentRow row = RunSequence(Seq({2, 2, 2}), o);
  EXPECT_EQ(row.sym.hits, 20);
  EXPECT_EQ(row.conn.hits, 20);
  EXPECT_EQ(row.unknowns, 0);
  EXPECT_DOUBLE_EQ(row.mean_z, 1);  // every corner has degree 2
  EXPECT_DOUBLE_EQ(row.mean_y, 0);
}

TEST(RunSequence, SymmetryDominatesMotifs) {
  // A cherry or pendant triangle forces a transposition, so sym >= motifs.
  PointOptions o;
  o.trials = 200;
  o.seed = 11;
  o.threads = 2;
  std::vector<Degree> d(30, 3);
  for (int i = 0; i < 6; ++i) d[i] = 1;
  for (int i = 6; i < 10; ++i) d[i] = 2;
  const ExperimentRow row = RunSequence(Seq(d), o);
  EXPECT_GE(row.sym.hits, row.motif_samples);
  EXPECT_GT(row.motif_samples, 0);
}

TEST(RunPoint, ResultsIndependentOfThreadCount) {
  Family f;
  f.kind = FamilyKind::kBounded;
  f.c = 1;
  f.beta = 0.5;
  PointOptions o;
  o.trials = 40;
  o.seed = 3;
  o.record_time = false;
  o.threads = 1;
  const std::string one = FormatCsv({RunPoint(f, 60, o)});
  o.threads = 4;
  const std::string four = FormatCsv({RunPoint(f, 60, o)});
  EXPECT_EQ(one, four);
}

TEST(MomentExperiment, ForcedSequences) {
  // (1,1,2) has a single realization, a path with one cherry.
  const auto a = MomentExperiment(Seq({1, 1, 2}), 30, 1);
  EXPECT_DOUBLE_EQ(a.y.mean, 1);
  EXPECT_DOUBLE_EQ(a.y.variance, 0);
  // The 4-cycle has no pendant triangle.
  const auto b = MomentExperiment(Seq({2, 2, 2, 2}), 30, 1);
  EXPECT_DOUBLE_EQ(b.z.mean, 0);
}

constexpr const char* kGoodConfig = R"({
  "family": "bounded",
  "params": {"delta": 3, "c": [0.5, 1.0], "beta": 0.5},
  "n_list": [20, 40],
  "trials": 5,
  "seed": 7,
  "method": "auto",
  "aut_budget": 100000,
  "out": "x.csv"
})";

TEST(SweepConfig, CrossProduct) {
  const SweepConfig cfg = ParseSweepConfig(kGoodConfig);
  ASSERT_EQ(cfg.points.size(), 4u);
  EXPECT_DOUBLE_EQ(cfg.points[0].family.c, 0.5);
  EXPECT_EQ(cfg.points[1].n, 40);
  EXPECT_DOUBLE_EQ(cfg.points[2].family.c, 1.0);
  EXPECT_EQ(cfg.options.trials, 5);
  EXPECT_EQ(cfg.options.aut_budget, 100000);
  EXPECT_EQ(cfg.out, "x.csv");
  EXPECT_TRUE(cfg.warnings.empty());
}

TEST(SweepConfig, DuplicatesWarn) {
  const SweepConfig cfg = ParseSweepConfig(
      R"({"family":"regular","params":{"degree":[3,3]},"n_list":[10,10],"trials":1,"seed":0})");
  EXPECT_EQ(cfg.points.size(), 1u);
  EXPECT_EQ(cfg.warnings.size(), 3u);
}

TEST(SweepConfig, EmptyNList) {
  const SweepConfig cfg =
      ParseSweepConfig(R"({"family":"regular","n_list":[],"trials":1,"seed":0})");
  EXPECT_TRUE(cfg.points.empty());
  const std::string csv = FormatCsv(Sweep(cfg));
  EXPECT_EQ(csv, std::string("# schema=") + kCsvSchema + "\n" + CsvHeader() + "\n");
}

std::string ConfigError(const std::string& text) {
  try {
    ParseSweepConfig(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kConfig);
    return e.what();
  }
  ADD_FAILURE() << "no error for " << text;
  return "";
}

TEST(SweepConfig, ErrorsNameLineAndField) {
  const std::string bad_trials = ConfigError("{\n\"family\": \"regular\",\n\"n_list\": [5],\n"
                                             "\"trials\": -1,\n\"seed\": 0\n}");
  EXPECT_NE(bad_trials.find("line 4"), std::string::npos) << bad_trials;
  EXPECT_NE(bad_trials.find("'trials'"), std::string::npos) << bad_trials;

  const std::string bad_family = ConfigError(
      "{\"family\": \"lattice\", \"n_list\": [5], \"trials\": 1, \"seed\": 0}");
  EXPECT_NE(bad_family.find("'family'"), std::string::npos) << bad_family;

  const std::string unknown = ConfigError(
      "{\"family\": \"regular\", \"n_list\": [5], \"trials\": 1, \"seed\": 0,\n\"colour\": 1}");
  EXPECT_NE(unknown.find("line 2"), std::string::npos) << unknown;

  const std::string syntax = ConfigError("{\n\"family\": \"regular\",\n\"n_list\": [5,\n}");
  EXPECT_NE(syntax.find("line 4"), std::string::npos) << syntax;

  const std::string missing = ConfigError("{\"family\": \"regular\", \"n_list\": [5]}");
  EXPECT_NE(missing.find("'trials'"), std::string::npos) << missing;

  const std::string param = ConfigError(
      "{\"family\": \"bounded\", \"params\": {\"beta\": [0.5, 2]}, \"n_list\": [5], "
      "\"trials\": 1, \"seed\": 0}");
  EXPECT_NE(param.find("params.beta[1]"), std::string::npos) << param;
}

TEST(Sweep, SeedsDependOnPointNotPosition) {
  const SweepConfig a = ParseSweepConfig(
      R"({"family":"regular","n_list":[10,12],"trials":4,"seed":9,"record_time":false})");
  const SweepConfig b = ParseSweepConfig(
      R"({"family":"regular","n_list":[12],"trials":4,"seed":9,"record_time":false})");
  const auto ra = Sweep(a);
  const auto rb = Sweep(b);
  EXPECT_EQ(CsvLine(ra[1]), CsvLine(rb[0]));
}

TEST(Csv, NotesAndColumns) {
  ExperimentRow row;
  row.family = "regular";
  row.params = "degree=3";
  row.n = 10;
  row.trials = 100;
  row.unknowns = 2;
  row.parity_adjusted = true;
  row.approximate_samples = 100;
  const std::string csv = FormatCsv({row});
  EXPECT_NE(csv.find("# parity_adjusted: regular degree=3 n=10"), std::string::npos);
  EXPECT_NE(csv.find("# approximate:"), std::string::npos);
  EXPECT_NE(csv.find("# invalid:"), std::string::npos);
  const auto columns = [](const std::string& line) {
    return std::count(line.begin(), line.end(), ',') + 1;
  };
  EXPECT_EQ(columns(CsvHeader()), 23);
  EXPECT_EQ(columns(CsvLine(row)), 23);
}

}  // namespace
}  // namespace degsym::harness
