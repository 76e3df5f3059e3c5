#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "degsym/degree_sequence.hpp"
#include "degsym/graph.hpp"

namespace degsym::motifs {

// Cherry: (u, v) leaves with u < v, w their common neighbor.
// Pendant triangle: u < v < w.
struct Triple {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;
  auto operator<=>(const Triple&) const = default;
};

struct TripleCount {
  std::int64_t count = 0;
  std::vector<Triple> witnesses;  // empty unless requested
};

// All analyses below throw Error{kDegreeMismatch} unless G has degree
// array d.
TripleCount CountCherries(const Graph& g, const DegreeSequence& d,
                          bool with_witnesses = true);

// Triangles with at least two degree-2 vertices; each triangle counted once.
TripleCount CountPendantTriangles(const Graph& g, const DegreeSequence& d,
                                  bool with_witnesses = true);

struct Deg1Structure {
  std::int64_t adjacent_deg1_pairs = 0;
  std::int64_t max_deg1_neighbors = 0;
};
Deg1Structure Deg1(const Graph& g, const DegreeSequence& d);

// Minimum number of degree->=3 vertices on a path between two distinct
// degree-1 vertices; nullopt stands for Infinity.
std::optional<std::int64_t> MinHighOnDeg1Path(const Graph& g,
                                              const DegreeSequence& d);

struct FewHighCycle {
  std::vector<Vertex> cycle;  // consecutive vertices, closing edge implied
  int high_vertices = 0;      // 0, 1 or 2
};

// A cycle through at most two vertices of degree >= 3, found on the graph
// with maximal degree-2 chains contracted.
std::optional<FewHighCycle> FindFewHighCycle(const Graph& g,
                                             const DegreeSequence& d);

inline constexpr Vertex kExactComponentVertices = 14;
inline constexpr std::int64_t kExactComponentEdges = 20;

struct ExcessComponent {
  std::int32_t component = 0;
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t n1 = 0;  // degree-1 vertices of G inside the component
  std::int64_t n2 = 0;
  bool n1_below_alpha = false;  // n1 < alpha * vertices
  bool n2_below_alpha = false;

  // Exact mode (vertices <= kExactComponentVertices).
  bool exact = false;
  // Vertex sets S with G[S] connected and e(G[S]) > |S|. The density
  // property depends only on S, so these decide it.
  std::int64_t excess_supports = 0;
  // Connected edge subgraphs F with |E(F)| > |V(F)|; -1 when the component
  // has more than kExactComponentEdges edges.
  std::int64_t excess_subgraphs = -1;
  // Every such F has |V_i(F)| < alpha |V(F)| for i = 1 and i = 2.
  bool density_holds = false;
};

std::vector<ExcessComponent> ExcessSubgraphReport(const Graph& g,
                                                  const DegreeSequence& d,
                                                  double alpha);

struct LengthScaleValues {
  double l1 = 0;
  double l2_1 = 0;  // i = 1; 0 when n_1 = 0
  double l2_2 = 0;  // i = 2; 0 when n_2 = 0
};

// Throws Error{kDegenerate} when a logarithm argument is <= 1.
LengthScaleValues LengthScales(const DegreeSequence& d, double c1, double c2,
                               double alpha);

// True iff every leaf-to-leaf path has >= 2 vertices of degree >= 3 in T.
// Throws Error{kNotATree}.
bool TreeBranchCheck(const Graph& t);

struct MotifReport {
  TripleCount cherries;
  TripleCount pendant_triangles;
  Deg1Structure deg1;
  std::optional<std::int64_t> min_high_on_deg1_path;
  std::optional<FewHighCycle> few_high_cycle;
  std::vector<ExcessComponent> excess_components;
};

MotifReport Analyze(const Graph& g, const DegreeSequence& d, double alpha);

}  // namespace degsym::motifs
