#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "degsym/automorphism.hpp"
#include "degsym/degree_sequence.hpp"
#include "degsym/graph.hpp"

// Exact ground truth at tiny scale: every labeled simple graph with a given
// degree sequence, and exact rational probabilities under the uniform
// measure on them.
namespace degsym::oracle {

using Rational = boost::rational<std::int64_t>;

std::string ToString(const Rational& r);

struct EnumerateOptions {
  std::int64_t max_m1 = 24;
  std::int64_t max_realizations = 2'000'000;
};

struct Realizations {
  std::vector<Degree> degrees;
  std::vector<Graph> graphs;  // pairwise distinct, in generation order

  std::size_t count() const { return graphs.size(); }
};

// Backtracking over rows in descending-degree order; each vertex chooses its
// remaining neighbors among later vertices and the residual sequence must
// stay graphical, so every branch ends in a realization.
// Throws Error{kBudgetExceeded} past either cap.
Realizations Enumerate(const DegreeSequence& d,
                       const EnumerateOptions& options = {});

// Number of realizations of an arbitrary non-negative sequence, stopping at
// `limit` (returns limit if reached). 0 iff not graphical.
std::int64_t CountRealizations(std::span<const Degree> degrees,
                               std::int64_t limit);
inline bool HasRealization(std::span<const Degree> degrees) {
  return CountRealizations(degrees, 1) > 0;
}

// Exhaustive automorphism counting over degree-preserving permutations
// (backtracking with adjacency consistency checks). Independent of the
// refinement search.
BigInt ExhaustiveGroupOrder(const Graph& g);
bool ExhaustiveIsSymmetric(const Graph& g);

// Statistics evaluated on each realization by direct enumeration of vertex
// triples.
std::int64_t CountCherriesDirect(const Graph& g);
std::int64_t CountPendantTrianglesDirect(const Graph& g);

Rational ExactPSymmetric(const DegreeSequence& d,
                         const EnumerateOptions& options = {});

enum class StatisticKind { kCherries, kPendantTriangles, kEdge, kSubgraph };

struct Statistic {
  StatisticKind kind = StatisticKind::kCherries;
  std::vector<Edge> edges;  // kEdge: one edge; kSubgraph: the edges of H

  static Statistic Cherries() { return {StatisticKind::kCherries, {}}; }
  static Statistic PendantTriangles() {
    return {StatisticKind::kPendantTriangles, {}};
  }
  static Statistic EdgeIndicator(Vertex u, Vertex v) {
    return {StatisticKind::kEdge, {Edge::Of(u, v)}};
  }
  static Statistic Contains(std::vector<Edge> h) {
    return {StatisticKind::kSubgraph, std::move(h)};
  }
};

// Exact mean of the statistic over all realizations; for kEdge and
// kSubgraph this is P(H subset of G).
Rational ExactExpectation(const Realizations& r, const Statistic& stat);
Rational ExactExpectation(const DegreeSequence& d, const Statistic& stat,
                          const EnumerateOptions& options = {});

// P(u ~ v | C subset of G) as a ratio of realization counts. Throws
// Error{kEdgeInC} if uv is in C, Error{kDegenerate} if no realization
// contains C.
Rational ExactConditionalEdgeProbability(const Realizations& r, Vertex u,
                                        Vertex v, std::span<const Edge> c);

// The fixed cross-validation corpus: every non-increasing graphical
// sequence with min degree >= 1, n <= 8, M_1 <= 16 whose realization count
// is between 2 and 1500, plus a few forced (single-realization) sequences.
std::vector<std::vector<Degree>> StandardCorpus();

struct EdgeBoundCalibration {
  double constant = 0;  // smallest C with P(H in G) <= (C Delta^2 / M_1)^q
  std::int64_t subgraphs_checked = 0;
  std::vector<Degree> worst_sequence;
  std::vector<Edge> worst_subgraph;
};

// Scans every one- and two-edge H on every corpus sequence.
EdgeBoundCalibration CalibrateEdgeBound(
    const std::vector<std::vector<Degree>>& corpus);

}  // namespace degsym::oracle
