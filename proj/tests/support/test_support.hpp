#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls into the library algorithms it is meant to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "degsym/degree_sequence.hpp"
#include "degsym/graph.hpp"

namespace degsym::testing {

inline Graph MakeGraph(Vertex n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.push_back({u, v});
  return Graph::FromEdges(n, e);
}

inline DegreeSequence Seq(std::vector<Degree> d) {
  return DegreeSequence::Validate(std::move(d));
}

inline DegreeSequence SeqOf(const Graph& g) {
  return DegreeSequence::Validate(g.DegreeArray());
}

inline Graph Path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::FromEdges(n, e);
}

inline Graph Cycle(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back(Edge::Of(i, (i + 1) % n));
  return Graph::FromEdges(n, e);
}

inline Graph Complete(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return Graph::FromEdges(n, e);
}

inline Graph Star(Vertex leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::FromEdges(leaves + 1, e);
}

inline Graph Petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back(Edge::Of(i, (i + 1) % 5));
    e.push_back(Edge::Of(i, i + 5));
    e.push_back(Edge::Of(5 + i, 5 + (i + 2) % 5));
  }
  return Graph::FromEdges(10, e);
}

// Adjacency matrix view, independent of Graph::HasEdge.
inline std::vector<std::vector<char>> Matrix(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
  for (const Edge& e : g.Edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

// Counts automorphisms by trying all n! permutations.
inline std::int64_t NaiveAutomorphismCount(const Graph& g) {
  const auto a = Matrix(g);
  const Vertex n = g.num_vertices();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (Vertex i = 0; i < n && ok; ++i) {
      for (Vertex j = i + 1; j < n && ok; ++j) ok = a[i][j] == a[p[i]][p[j]];
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline bool NaiveIsSymmetric(const Graph& g) {
  return NaiveAutomorphismCount(g) > 1;
}

// Same answer as NaiveIsSymmetric, stopping at the first non-identity
// automorphism in lexicographic order.
inline bool NaiveHasNontrivialAutomorphism(const Graph& g) {
  const auto a = Matrix(g);
  const Vertex n = g.num_vertices();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  while (std::next_permutation(p.begin(), p.end())) {
    bool ok = true;
    for (Vertex i = 0; i < n && ok; ++i) {
      for (Vertex j = i + 1; j < n && ok; ++j) ok = a[i][j] == a[p[i]][p[j]];
    }
    if (ok) return true;
  }
  return false;
}

// Every labeled tree on n >= 2 vertices, via Pruefer sequences.
inline void ForEachTree(Vertex n, const std::function<void(const Graph&)>& f) {
  if (n == 2) {
    f(MakeGraph(2, {{0, 1}}));
    return;
  }
  const int len = n - 2;
  std::vector<Vertex> code(len, 0);
  std::vector<Edge> edges;
  while (true) {
    std::vector<int> d(n, 1);
    for (Vertex x : code) ++d[x];
    edges.clear();
    for (Vertex x : code) {
      Vertex leaf = 0;
      while (d[leaf] != 1) ++leaf;
      edges.push_back(Edge::Of(leaf, x));
      --d[leaf];
      --d[x];
    }
    Vertex u = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (d[v] == 1) {
        if (u < 0) {
          u = v;
        } else {
          edges.push_back(Edge::Of(u, v));
        }
      }
    }
    f(Graph::FromEdges(n, edges));
    int i = len - 1;
    while (i >= 0 && code[i] == n - 1) code[i--] = 0;
    if (i < 0) break;
    ++code[i];
  }
}

inline std::vector<Graph> AllTrees(Vertex n) {
  std::vector<Graph> out;
  ForEachTree(n, [&](const Graph& t) { out.push_back(t); });
  return out;
}

// Every labeled graph on n vertices (n <= 6).
inline void ForEachGraph(Vertex n, const std::function<void(const Graph&)>& f) {
  std::vector<Edge> pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1u) edges.push_back(pairs[k]);
    }
    f(Graph::FromEdges(n, edges));
  }
}

// Realization count via the pairing model: simple perfect matchings of the
// half-edge points divided by prod d_i!.
inline std::int64_t PairingCensus(const std::vector<Degree>& d) {
  std::vector<Vertex> owner;
  for (Vertex v = 0; v < static_cast<Vertex>(d.size()); ++v) {
    for (Degree k = 0; k < d[v]; ++k) owner.push_back(v);
  }
  const std::size_t m = owner.size();
  std::vector<char> used(m, 0);
  std::map<std::pair<Vertex, Vertex>, int> multiplicity;
  std::int64_t simple = 0;
  std::function<void()> rec = [&]() {
    std::size_t i = 0;
    while (i < m && used[i]) ++i;
    if (i == m) {
      ++simple;
      return;
    }
    used[i] = 1;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (used[j] || owner[i] == owner[j]) continue;
      const auto key = std::minmax(owner[i], owner[j]);
      if (multiplicity[key] > 0) continue;
      used[j] = 1;
      ++multiplicity[key];
      rec();
      --multiplicity[key];
      used[j] = 0;
    }
    used[i] = 0;
  };
  rec();
  std::int64_t denom = 1;
  for (Degree x : d) {
    for (Degree k = 2; k <= x; ++k) denom *= k;
  }
  return simple / denom;
}

inline Graph RandomGnp(Vertex n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph::FromEdges(n, edges);
}

}  // namespace degsym::testing
