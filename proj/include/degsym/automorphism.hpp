#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "degsym/degree_sequence.hpp"
#include "degsym/graph.hpp"
#include "degsym/permutation.hpp"

namespace degsym {

using BigInt = boost::multiprecision::cpp_int;

enum class Verdict { kTrivial, kNontrivial, kUnknown };
std::string VerdictName(Verdict v);

struct SearchOptions {
  // Maximum number of refinement calls (search-tree nodes).
  std::int64_t node_budget = 2'000'000;
};

struct AutReport {
  Verdict verdict = Verdict::kUnknown;
  std::optional<Permutation> witness;  // set iff verdict == kNontrivial
  std::int64_t nodes = 0;
};

// Individualization-refinement search for a non-identity automorphism.
// Cells start as degree classes and are refined to an equitable partition;
// the search walks the first path to a discrete leaf, then, from the deepest
// level upward, tries to map each individualized vertex to another member
// of its target cell, pruning branches whose refinement trace differs from
// the first path. Running out of budget yields kUnknown, never a wrong
// verdict.
AutReport FindNontrivialAutomorphism(const Graph& g,
                                     const SearchOptions& options = {});

inline constexpr Vertex kGroupOrderMaxVertices = 64;

// |Aut(G)| as the product of first-path orbit sizes. Throws
// Error{kSearchBudgetExceeded}, or Error{kInvalidArgument} when
// n > max_vertices.
BigInt GroupOrder(const Graph& g, const SearchOptions& options = {},
                  Vertex max_vertices = kGroupOrderMaxVertices);

// Anatomy of a (graph, automorphism) pair. A_1, A_2, A_{>=3} are the moved
// vertices of degree 1, 2 and >= 3; H_0 is the subgraph induced by the moved
// vertices.
struct ParamVector {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::int64_t a_ge3 = 0;
  std::int64_t ell = 0;  // total degree of A_{>=3}
  // s[i] = number of i-cycles for i = 1..6; s[1] is always 0 since fixed
  // points are outside the support. s[0] is unused.
  std::array<std::int64_t, 7> s{};
  std::int64_t long_cycles = 0;      // cycles of length > 6
  std::int64_t long_cycle_mass = 0;  // points in those cycles
  std::int64_t k = 0;   // |E(H_0)|
  std::int64_t e1 = 0;  // edges of H_0 fixed by sigma*
  std::int64_t f = 0;   // sigma*-orbits consisting of edges of H_0
  std::int64_t m = 0;   // k - f
  std::int64_t h_edges = 0;  // |E(H_sigma(G))|
};

enum class SymmetryClass { kS1, kS2 };
std::string SymmetryClassName(SymmetryClass c);

struct Anatomy {
  ParamVector params;
  // kS1 iff a_{>=3} <= R_1 a_1 or a_{>=3} <= R_2 a_2.
  SymmetryClass classification = SymmetryClass::kS1;
};

// Throws Error{kNotAnAutomorphism} unless sigma in Aut(G), and
// Error{kDegreeMismatch} unless G has degree array d.
Anatomy ParameterVector(const Graph& g, const Permutation& sigma,
                        const DegreeSequence& d, double r1, double r2);

}  // namespace degsym
