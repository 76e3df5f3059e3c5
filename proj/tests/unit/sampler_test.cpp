#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "degsym/error.hpp"
#include "degsym/oracle.hpp"
#include "degsym/sampler.hpp"
#include "support/test_support.hpp"

namespace degsym {
namespace {

using testing::Seq;

double ChiSquarePValue(const std::map<std::vector<Edge>, std::int64_t>& counts,
                       std::size_t cells, std::int64_t draws) {
  const double expected = static_cast<double>(draws) / static_cast<double>(cells);
  double stat = 0;
  for (const auto& [key, c] : counts) {
    stat += (c - expected) * (c - expected) / expected;
  }
  stat += static_cast<double>(cells - counts.size()) * expected;
  boost::math::chi_squared dist(static_cast<double>(cells - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

TEST(Sample, UniqueRealizations) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(Sample(Seq({1, 1}), SampleMethod::Rejection(), seed),
              testing::MakeGraph(2, {{0, 1}}));
    EXPECT_EQ(Sample(Seq({2, 2, 2}), SampleMethod::Rejection(), seed),
              testing::Complete(3));
    EXPECT_EQ(Sample(Seq({2, 2, 2}), SampleMethod::Switch(), seed),
              testing::Complete(3));
  }
}

TEST(Sample, FourCycleUniformity) {
  const auto d = Seq({2, 2, 2, 2});
  const auto real = oracle::Enumerate(d);
  ASSERT_EQ(real.count(), 3u);
  std::set<std::vector<Edge>> support;
  for (const Graph& g : real.graphs) support.insert(g.Edges());
  std::map<std::vector<Edge>, std::int64_t> counts;
  constexpr std::int64_t kDraws = 30000;
  for (std::int64_t t = 0; t < kDraws; ++t) {
    const Graph g = Sample(d, SampleMethod::Rejection(), DeriveSeed(42, t));
    ASSERT_TRUE(support.count(g.Edges()));
    ++counts[g.Edges()];
  }
  EXPECT_GT(ChiSquarePValue(counts, 3, kDraws), 0.01);
}

TEST(Sample, DegreeArrayAlwaysMatches) {
  const std::vector<std::vector<Degree>> seqs = {
      {3, 3, 3, 3, 3, 3}, {1, 1, 1, 1, 2, 2, 3, 3}, {4, 4, 2, 2, 1, 1}};
  for (const auto& raw : seqs) {
    const auto d = Seq(raw);
    for (auto method : {SampleMethod::Rejection(), SampleMethod::Switch(50),
                        SampleMethod::Auto()}) {
      for (std::uint64_t seed = 0; seed < 30; ++seed) {
        EXPECT_EQ(Sample(d, method, seed).DegreeArray(), raw);
      }
    }
  }
}

TEST(Sample, Deterministic) {
  const auto d = Seq(std::vector<Degree>(60, 3));
  for (auto method : {SampleMethod::Rejection(), SampleMethod::Switch()}) {
    EXPECT_EQ(Sample(d, method, 99), Sample(d, method, 99));
  }
  EXPECT_NE(Sample(d, SampleMethod::Rejection(), 1),
            Sample(d, SampleMethod::Rejection(), 2));
}

TEST(Sample, RejectionBudget) {
  // Star plus leaves: K_{1,5} has acceptance 5!/9!! per round.
  const auto d = Seq({5, 1, 1, 1, 1, 1});
  try {
    Sample(d, SampleMethod::Rejection(1), 0);
    SUCCEED();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kRejectionBudgetExceeded);
  }
  // A dense sequence where rejection essentially never succeeds.
  std::vector<Degree> dense(30, 25);
  const auto dd = Seq(dense);
  EXPECT_LT(PairingAcceptanceEstimate(dd), 1e-4);
  try {
    Sample(dd, SampleMethod::Rejection(100), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kRejectionBudgetExceeded);
  }
  const auto r = SampleDetailed(dd, SampleMethod::Auto(), 0);
  EXPECT_EQ(r.used, SampleKind::kSwitchChain);
  EXPECT_TRUE(r.approximate);
  EXPECT_EQ(r.graph.DegreeArray(), dense);
}

TEST(PairingRound, SimpleFlag) {
  CounterRng rng(1);
  for (int i = 0; i < 200; ++i) {
    EXPECT_TRUE(PairingRound(Seq({1, 1}), rng).simple);
  }
  // Every matching of the 4 points of (2,2) is a double edge or two loops.
  const std::vector<Degree> two_two{2, 2};
  for (int i = 0; i < 200; ++i) {
    EXPECT_FALSE(PairingRound(two_two, rng).simple);
  }
  const auto d = Seq({2, 2, 2});
  int simple = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto out = PairingRound(d, rng);
    EXPECT_EQ(out.pairs.size(), 3u);
    simple += out.simple;
  }
  // 8 of the 15 matchings of 6 points form a triangle.
  EXPECT_NEAR(simple / 2000.0, 8.0 / 15.0, 0.05);
}

TEST(PairingRound, AcceptanceRateCubicOnFour) {
  const auto d = Seq({3, 3, 3, 3});
  EXPECT_NEAR(PairingAcceptanceEstimate(d), std::exp(-2.0), 1e-12);
  CounterRng rng(2024);
  int simple = 0;
  constexpr int kRounds = 100000;
  for (int i = 0; i < kRounds; ++i) simple += PairingRound(d, rng).simple;
  EXPECT_NEAR(static_cast<double>(simple) / kRounds, std::exp(-2.0), 0.05);
}

TEST(SwitchChain, PathExample) {
  SwitchChain chain(testing::Path(4));  // edges 01, 12, 23
  EXPECT_TRUE(chain.TrySwitch(0, 2, false));
  EXPECT_EQ(chain.ToGraph(), testing::MakeGraph(4, {{0, 2}, {1, 3}, {1, 2}}));
}

TEST(SwitchChain, RejectsDuplicate) {
  // 4-cycle 0-1-2-3: switching 01 and 23 as {0,3},{1,2} duplicates both.
  const Graph c4 = testing::Cycle(4);
  SwitchChain chain(c4);
  const auto& e = chain.edges();
  std::size_t i01 = 0;
  std::size_t i23 = 0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == Edge{0, 1}) i01 = k;
    if (e[k] == Edge{2, 3}) i23 = k;
  }
  EXPECT_FALSE(chain.TrySwitch(i01, i23, true));
  EXPECT_EQ(chain.ToGraph(), c4);
}

TEST(SwitchChain, TriangleNeverChanges) {
  CounterRng rng(5);
  Graph g = testing::Complete(3);
  for (int i = 0; i < 100; ++i) {
    g = SwitchStep(g, rng);
    EXPECT_EQ(g.DegreeArray(), (std::vector<Degree>{2, 2, 2}));
  }
}

TEST(SwitchChain, ReverseSwitchRestores) {
  std::mt19937_64 gen(17);
  for (int t = 0; t < 200; ++t) {
    const Graph g = testing::RandomGnp(10, 0.35, gen);
    if (g.num_edges() < 2) continue;
    SwitchChain chain(g);
    const std::size_t m = chain.num_edges();
    const std::size_t i = gen() % m;
    const std::size_t j = gen() % m;
    const bool flip = gen() & 1u;
    if (!chain.TrySwitch(i, j, flip)) {
      EXPECT_EQ(chain.ToGraph(), g);
      continue;
    }
    EXPECT_EQ(chain.ToGraph().DegreeArray(), g.DegreeArray());
    bool restored = false;
    for (bool back : {false, true}) {
      SwitchChain copy = chain;
      if (copy.TrySwitch(i, j, back) && copy.ToGraph() == g) restored = true;
    }
    EXPECT_TRUE(restored);
  }
}

TEST(HavelHakimi, RealizesSequences) {
  for (const auto& raw : oracle::StandardCorpus()) {
    const Graph g = HavelHakimi(Seq(raw));
    EXPECT_EQ(g.DegreeArray(), raw);
  }
  std::vector<Degree> big(1000, 3);
  for (int i = 0; i < 100; ++i) big[i] = 1;
  EXPECT_EQ(HavelHakimi(Seq(big)).DegreeArray(), big);
}

TEST(Rng, DeriveSeedDistinctAndStable) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(DeriveSeed(7, i));
  EXPECT_EQ(seen.size(), 10000u);
  CounterRng a(3);
  CounterRng b(3);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
  CounterRng c(9);
  std::array<int, 7> hist{};
  for (int i = 0; i < 70000; ++i) ++hist[c.Below(7)];
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
}

}  // namespace
}  // namespace degsym
