#include <gtest/gtest.h>

#include <random>

#include "degsym/degree_sequence.hpp"
#include "degsym/error.hpp"
#include "degsym/oracle.hpp"
#include "support/test_support.hpp"

namespace degsym {
namespace {

Errc CodeOf(const std::vector<Degree>& d) {
  try {
    DegreeSequence::Validate(d);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::kInvalidArgument;
}

TEST(Validate, AcceptsTriangle) {
  const auto d = DegreeSequence::Validate({2, 2, 2});
  EXPECT_EQ(d.size(), 3u);
}

TEST(Validate, RejectsWithNamedCondition) {
  EXPECT_EQ(CodeOf({3, 1, 1}), Errc::kOddSum);
  EXPECT_EQ(CodeOf({3, 3, 1, 1}), Errc::kNotGraphical);
  EXPECT_EQ(CodeOf({2, 0, 2}), Errc::kZeroDegree);
  EXPECT_EQ(CodeOf({}), Errc::kInvalidArgument);
  try {
    DegreeSequence::Validate({3, 1, 1});
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("OddSum"), std::string::npos);
  }
}

TEST(Validate, NotGraphicalAgreesWithExhaustiveGraphsOnFourVertices) {
  bool found = false;
  testing::ForEachGraph(4, [&](const Graph& g) {
    auto a = g.DegreeArray();
    std::sort(a.begin(), a.end(), std::greater<>());
    found |= a == std::vector<Degree>{3, 3, 1, 1};
  });
  EXPECT_FALSE(found);
}

TEST(Validate, AgreesWithOracleForSmallSums) {
  // Every positive sequence with n <= 7 and M1 <= 20 (non-increasing, since
  // graphicality is label-independent).
  std::vector<Degree> cur;
  int checked = 0;
  std::function<void(Degree, int)> rec = [&](Degree cap, int sum) {
    if (!cur.empty() && sum % 2 == 0) {
      bool valid = true;
      try {
        DegreeSequence::Validate(cur);
      } catch (const Error&) {
        valid = false;
      }
      EXPECT_EQ(valid, oracle::HasRealization(cur)) << ::testing::PrintToString(cur);
      ++checked;
    }
    if (cur.size() == 7) return;
    for (Degree x = 1; x <= cap && sum + x <= 20; ++x) {
      cur.push_back(x);
      rec(x, sum + x);
      cur.pop_back();
    }
  };
  rec(8, 0);
  EXPECT_GT(checked, 300);
}

TEST(Statistics, SmallExamples) {
  auto s = Statistics(std::vector<Degree>{1, 1, 2});
  EXPECT_EQ(s.n1, 2);
  EXPECT_EQ(s.M(1), 4);
  EXPECT_EQ(s.M(2), 2);
  EXPECT_EQ(s.max_degree, 2);
  EXPECT_DOUBLE_EQ(s.average_degree(), 4.0 / 3.0);

  s = Statistics(std::vector<Degree>{3, 3, 3, 3});
  EXPECT_EQ(s.n1, 0);
  EXPECT_EQ(s.M(1), 12);
  EXPECT_EQ(s.M(2), 24);
  EXPECT_EQ(s.M(3), 24);
  EXPECT_EQ(s.M(4), 0);

  s = Statistics(std::vector<Degree>{1, 1, 1, 1, 4});
  EXPECT_EQ(s.M(2), 12);
  EXPECT_EQ(s.M(3), 24);
  EXPECT_EQ(s.M(4), 24);
}

TEST(Statistics, NoOverflowAtLargeScale) {
  // M4 = 10^6 (5000)_4 exceeds 2^63.
  std::vector<Degree> d(1'000'000, 5000);
  const auto s = Statistics(d);
  EXPECT_EQ(WideToString(s.M(4)), "624250274970000000000");
}

TEST(Statistics, PropertiesOnRandomSequences) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    std::vector<Degree> d(n);
    for (auto& x : d) x = 1 + static_cast<Degree>(rng() % 9);
    const auto s = Statistics(d);
    std::int64_t count = 0;
    Wide total = 0;
    std::array<Wide, 4> direct{};
    for (Degree x : d) {
      Wide f = 1;
      for (int i = 0; i < 4; ++i) {
        f *= (x - i);
        direct[i] += f;
      }
    }
    for (int j = 1; j <= 9; ++j) {
      const auto nj = std::count(d.begin(), d.end(), j);
      count += nj;
      total += Wide{nj} * j;
    }
    EXPECT_EQ(count, s.n);
    EXPECT_TRUE(total == s.M(1));
    for (int i = 0; i < 4; ++i) EXPECT_TRUE(direct[i] == s.M(i + 1));
    for (int i = 1; i <= 3; ++i) EXPECT_TRUE(s.M(i + 1) <= Wide{s.max_degree} * s.M(i));
    EXPECT_EQ(s.n1 + s.n2 + s.n_ge3, s.n);
  }
}

TEST(Diagnostics, AlphasForTenTen) {
  const auto d = DegreeSequence::Validate({3, 3, 3, 3});
  const auto t = Diagnostics(d, 10, 10, 0.5);
  EXPECT_DOUBLE_EQ(t.alpha2, 1.0 / 14.0);
  EXPECT_DOUBLE_EQ(t.alpha1, (13.0 / 14.0) / 14.0);
}

TEST(Diagnostics, RegularHasZeroBoundedRatios) {
  const auto d = DegreeSequence::Validate(std::vector<Degree>(20, 3));
  const auto t = Diagnostics(d, 10, 10, 0.5);
  EXPECT_EQ(t.r_bounded_1, 0);
  EXPECT_EQ(t.r_bounded_2, 0);
  EXPECT_EQ(t.sub_deg1_paths, 0);
  EXPECT_EQ(t.sub_density[0], 0);
  EXPECT_GT(t.sub_growth, 0);
}

TEST(Diagnostics, AllOnesFlagsDegenerateM2) {
  const auto d = DegreeSequence::Validate(std::vector<Degree>(100, 1));
  const auto t = Diagnostics(d, 10, 10, 0.5);
  EXPECT_TRUE(t.degenerate_m2);
  EXPECT_EQ(t.r_super_1, 0);
  EXPECT_EQ(t.r_super_2, 0);
  EXPECT_DOUBLE_EQ(t.r_bounded_1, 10.0);
}

TEST(Diagnostics, RatiosPositiveAndFinite) {
  std::vector<Degree> raw(100, 3);
  for (int i = 0; i < 10; ++i) raw[i] = 1;
  for (int i = 10; i < 30; ++i) raw[i] = 2;
  const auto t = Diagnostics(DegreeSequence::Validate(raw), 10, 10, 0.5);
  for (double x : {t.r_bounded_1, t.r_bounded_2, t.r_super_1, t.r_super_2,
                   t.sub_growth, t.sub_deg1_paths, t.sub_deg2_paths,
                   t.sub_density[0], t.sub_density[1]}) {
    EXPECT_GT(x, 0);
    EXPECT_TRUE(std::isfinite(x));
  }
  EXPECT_DOUBLE_EQ(t.r_bounded_1, 1.0);
  EXPECT_DOUBLE_EQ(t.r_bounded_2, 0.2);
}

TEST(Diagnostics, BadConstants) {
  const auto d = DegreeSequence::Validate({2, 2, 2});
  EXPECT_THROW(Diagnostics(d, 3, 10, 0.5), Error);  // 1/6 - 1/6 - 1/10 < 0
  try {
    Diagnostics(d, 1, 1, 0.5);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kBadConstants);
  }
  EXPECT_THROW(Diagnostics(d, 10, 10, 1.0), Error);
}

TEST(DegreeText, ParsesBothFormatsAndRoundTrips) {
  EXPECT_EQ(ParseDegreeText("3\n2\n# comment\n\n1\n"),
            (std::vector<Degree>{3, 2, 1}));
  EXPECT_EQ(ParseDegreeText("2 x 1\n1 x 2\n"), (std::vector<Degree>{1, 1, 2}));
  std::vector<Degree> d{5, 5, 5, 1, 1, 3};
  for (auto format : {DegreeFormat::kPerLine, DegreeFormat::kRunLength}) {
    EXPECT_EQ(ParseDegreeText(FormatDegreeText(d, format)), d);
  }
  EXPECT_EQ(FormatDegreeText(std::vector<Degree>(200, 1)), "200 x 1\n");
}

TEST(DegreeText, ReportsLine) {
  try {
    ParseDegreeText("1\n1\nfoo\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kParse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

}  // namespace
}  // namespace degsym
