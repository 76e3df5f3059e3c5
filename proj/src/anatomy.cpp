#include <algorithm>
#include <cassert>
#include <set>

#include "degsym/automorphism.hpp"
#include "degsym/error.hpp"

namespace degsym {

std::string SymmetryClassName(SymmetryClass c) {
  return c == SymmetryClass::kS1 ? "S1" : "S2";
}

Anatomy ParameterVector(const Graph& g, const Permutation& sigma,
                        const DegreeSequence& d, double r1, double r2) {
  const Vertex n = g.num_vertices();
  if (static_cast<std::size_t>(n) != d.size()) {
    throw Error(Errc::kDegreeMismatch, "graph order differs from sequence length");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != d[v]) {
      throw Error(Errc::kDegreeMismatch,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(g.degree(v)) + ", expected " +
                      std::to_string(d[v]));
    }
  }
  if (!IsAutomorphism(g, sigma)) {
    throw Error(Errc::kNotAnAutomorphism,
                sigma.ToCycleString() + " is not an automorphism");
  }

  ParamVector p;
  for (Vertex v : sigma.Support()) {
    if (d[v] == 1) {
      ++p.a1;
    } else if (d[v] == 2) {
      ++p.a2;
    } else {
      ++p.a_ge3;
      p.ell += d[v];
    }
  }
  for (const auto& cycle : sigma.Cycles()) {
    const auto len = static_cast<std::int64_t>(cycle.size());
    if (len <= 6) {
      ++p.s[static_cast<std::size_t>(len)];
    } else {
      ++p.long_cycles;
      p.long_cycle_mass += len;
    }
  }

  auto moved = [&](Vertex v) { return sigma(v) != v; };
  std::set<Edge> h0;
  for (const Edge& e : g.Edges()) {
    if (moved(e.u) || moved(e.v)) ++p.h_edges;
    if (moved(e.u) && moved(e.v)) h0.insert(e);
  }
  p.k = static_cast<std::int64_t>(h0.size());
  std::set<Edge> seen;
  for (const Edge& e : h0) {
    if (sigma(e.u) == e.v && sigma(e.v) == e.u) ++p.e1;
    if (seen.count(e)) continue;
    // sigma preserves E(G) and supp(sigma), so the orbit stays inside H_0.
    ++p.f;
    Edge x = e;
    do {
      seen.insert(x);
      x = Edge::Of(sigma(x.u), sigma(x.v));
    } while (x != e);
  }
  p.m = p.k - p.f;
  assert(p.h_edges == p.a1 + 2 * p.a2 + p.ell - p.k);
  assert(p.e1 <= p.f && p.e1 <= p.s[2]);

  Anatomy out;
  out.params = p;
  const auto a3 = static_cast<double>(p.a_ge3);
  out.classification = (a3 <= r1 * static_cast<double>(p.a1) ||
                        a3 <= r2 * static_cast<double>(p.a2))
                           ? SymmetryClass::kS1
                           : SymmetryClass::kS2;
  return out;
}

}  // namespace degsym
