#include <gtest/gtest.h>

#include <random>

#include "degsym/error.hpp"
#include "degsym/graph.hpp"
#include "support/test_support.hpp"

namespace degsym {
namespace {

using testing::MakeGraph;

Errc BuildError(Vertex n, std::vector<Edge> edges) {
  try {
    Graph::FromEdges(n, edges);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::kInvalidArgument;
}

TEST(FromEdges, Triangle) {
  const Graph g = MakeGraph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.DegreeArray(), (std::vector<Degree>{2, 2, 2}));
  EXPECT_TRUE(g.HasEdge(2, 0));
}

TEST(FromEdges, Errors) {
  EXPECT_EQ(BuildError(2, {{0, 0}}), Errc::kSelfLoop);
  EXPECT_EQ(BuildError(4, {{0, 1}, {1, 0}}), Errc::kDuplicateEdge);
  EXPECT_EQ(BuildError(3, {{0, 3}}), Errc::kLabelOutOfRange);
  EXPECT_EQ(BuildError(3, {{-1, 2}}), Errc::kLabelOutOfRange);
}

TEST(FromEdges, InvariantsOnRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 30);
    const Graph g = testing::RandomGnp(n, 0.2, rng);
    std::vector<Degree> count(n, 0);
    for (const Edge& e : g.Edges()) {
      ++count[e.u];
      ++count[e.v];
      EXPECT_LT(e.u, e.v);
    }
    EXPECT_EQ(count, g.DegreeArray());
    std::int64_t total = 0;
    for (Vertex v = 0; v < n; ++v) {
      total += g.degree(v);
      auto nb = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex w : nb) EXPECT_TRUE(g.HasEdge(w, v));
    }
    EXPECT_EQ(total, 2 * g.num_edges());
  }
}

TEST(Components, Examples) {
  const Graph two = MakeGraph(4, {{0, 1}, {2, 3}});
  const auto c = ConnectedComponents(two);
  ASSERT_EQ(c.count(), 2u);
  for (const auto& info : c.info) {
    EXPECT_EQ(info.num_vertices, 2);
    EXPECT_EQ(info.num_edges, 1);
  }
  const auto c5 = ConnectedComponents(testing::Cycle(5));
  ASSERT_EQ(c5.count(), 1u);
  EXPECT_EQ(c5.info[0].num_vertices, 5);
  EXPECT_EQ(c5.info[0].num_edges, 5);

  const auto empty = ConnectedComponents(Graph::FromEdges(3, {}));
  EXPECT_EQ(empty.count(), 3u);
}

TEST(Components, IsConnected) {
  EXPECT_TRUE(IsConnected(testing::Path(4)));
  EXPECT_FALSE(IsConnected(MakeGraph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(IsConnected(Graph::FromEdges(1, {})));
}

TEST(Components, RefineUnderEdgeDeletion) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Graph g = testing::RandomGnp(12, 0.25, rng);
    const auto base = ConnectedComponents(g);
    std::int64_t edges = 0;
    for (const auto& info : base.info) edges += info.num_edges;
    EXPECT_EQ(edges, g.num_edges());
    auto all = g.Edges();
    for (std::size_t k = 0; k < all.size(); ++k) {
      auto fewer = all;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
      EXPECT_GE(ConnectedComponents(Graph::FromEdges(12, fewer)).count(),
                base.count());
    }
  }
}

TEST(TwoCore, Examples) {
  const Graph tree = MakeGraph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  EXPECT_EQ(TwoCore(tree).graph.num_vertices(), 0);

  const Graph c4_pendant = MakeGraph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}});
  const auto core = TwoCore(c4_pendant);
  EXPECT_EQ(core.original, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(core.graph.num_edges(), 4);

  // Two triangles joined by the path 2-6-7-3: peeling removes nothing.
  const Graph dumbbell = MakeGraph(
      8, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 6}, {6, 7}, {7, 3}});
  const auto db = TwoCore(dumbbell);
  EXPECT_EQ(db.graph.num_vertices(), 8);
  EXPECT_EQ(db.graph.num_edges(), 9);
}

TEST(TwoCore, IdempotentAndMinDegreeTwo) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Graph g = testing::RandomGnp(15, 0.12, rng);
    const auto once = TwoCore(g);
    const auto twice = TwoCore(once.graph);
    EXPECT_EQ(once.graph, twice.graph);
    for (Vertex v = 0; v < once.graph.num_vertices(); ++v) {
      EXPECT_GE(once.graph.degree(v), 2);
    }
  }
}

TEST(InducedSubgraph, Examples) {
  const Graph tri = testing::Complete(3);
  const std::vector<Vertex> all{0, 1, 2};
  EXPECT_EQ(InducedSubgraph(tri, all).graph, tri);
  EXPECT_EQ(InducedSubgraph(tri, std::vector<Vertex>{}).graph.num_vertices(), 0);
  const auto pair = InducedSubgraph(tri, std::vector<Vertex>{0, 1});
  EXPECT_EQ(pair.graph.num_edges(), 1);
  EXPECT_EQ(pair.original, (std::vector<Vertex>{0, 1}));
}

TEST(EdgeList, RoundTripAndFormat) {
  const Graph g = MakeGraph(4, {{2, 3}, {0, 1}, {1, 2}});
  const std::string text = FormatEdgeList(g);
  EXPECT_EQ(text, "4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(ParseEdgeList(text), g);
}

TEST(EdgeList, ParseErrors) {
  EXPECT_THROW(ParseEdgeList("3 2\n0 1\n"), Error);
  EXPECT_THROW(ParseEdgeList("3 1\n0 x\n"), Error);
  try {
    ParseEdgeList("3 2\n0 1\n1 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kSelfLoop);
  }
}

}  // namespace
}  // namespace degsym
