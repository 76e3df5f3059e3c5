#include "degsym/motifs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <map>

#include "degsym/error.hpp"

namespace degsym::motifs {
namespace {

void CheckDegrees(const Graph& g, const DegreeSequence& d) {
  if (static_cast<std::size_t>(g.num_vertices()) != d.size()) {
    throw Error(Errc::kDegreeMismatch, "graph order differs from sequence length");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != d[v]) {
      throw Error(Errc::kDegreeMismatch,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(g.degree(v)) + ", expected " +
                      std::to_string(d[v]));
    }
  }
}

bool High(const Graph& g, Vertex v) { return g.degree(v) >= 3; }

// 0/1-BFS from each degree-1 vertex with vertex weight [deg >= 3]; stops at
// the first other degree-1 vertex popped.
std::optional<std::int64_t> MinHighBetweenLeaves(const Graph& g) {
  const Vertex n = g.num_vertices();
  constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
  std::optional<std::int64_t> best;
  std::vector<std::int64_t> dist(static_cast<std::size_t>(n), kUnreached);
  std::vector<Vertex> touched;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (g.degree(s) != 1) continue;
    for (Vertex v : touched) dist[v] = kUnreached;
    touched.clear();
    queue.clear();
    dist[s] = 0;
    touched.push_back(s);
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (best && dist[u] >= *best) break;
      if (u != s && g.degree(u) == 1) {
        best = dist[u];
        break;
      }
      for (Vertex w : g.neighbors(u)) {
        const std::int64_t nd = dist[u] + (High(g, w) ? 1 : 0);
        if (nd >= dist[w]) continue;
        if (dist[w] == kUnreached) touched.push_back(w);
        dist[w] = nd;
        if (High(g, w)) {
          queue.push_back(w);
        } else {
          queue.push_front(w);
        }
      }
    }
  }
  return best;
}

// Walks a degree-2 chain starting with the step start -> next. Returns the
// first vertex of degree != 2 reached (or start again, for a pure cycle) and
// the interior vertices in order.
struct ChainEnd {
  Vertex end = -1;
  std::vector<Vertex> interior;
};

ChainEnd WalkChain(const Graph& g, Vertex start, Vertex next) {
  ChainEnd out;
  Vertex prev = start;
  Vertex cur = next;
  while (g.degree(cur) == 2 && cur != start) {
    out.interior.push_back(cur);
    const auto nb = g.neighbors(cur);
    const Vertex step = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = step;
  }
  out.end = cur;
  return out;
}

bool ConnectedOnMask(const Graph& g, const std::vector<Vertex>& vertices,
                     std::uint32_t mask, const std::vector<int>& local) {
  const int first = std::countr_zero(mask);
  std::uint32_t seen = 1u << first;
  std::vector<Vertex> stack{vertices[first]};
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      const int i = local[w];
      if (i < 0 || !(mask >> i & 1u) || (seen >> i & 1u)) continue;
      seen |= 1u << i;
      stack.push_back(w);
    }
  }
  return seen == mask;
}

void ExactExcess(const Graph& g, const std::vector<Vertex>& vertices,
                 double alpha, ExcessComponent& out) {
  const int k = static_cast<int>(vertices.size());
  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int i = 0; i < k; ++i) local[vertices[i]] = i;

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (local[w] > i) edges.emplace_back(i, local[w]);
    }
  }

  out.exact = true;
  out.density_holds = true;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::int64_t e = 0;
    for (const auto& [a, b] : edges) e += (mask >> a & 1u) && (mask >> b & 1u);
    const int size = std::popcount(mask);
    if (e <= size || !ConnectedOnMask(g, vertices, mask, local)) continue;
    ++out.excess_supports;
    int n1 = 0;
    int n2 = 0;
    for (int i = 0; i < k; ++i) {
      if (!(mask >> i & 1u)) continue;
      n1 += g.degree(vertices[i]) == 1;
      n2 += g.degree(vertices[i]) == 2;
    }
    if (!(n1 < alpha * size) || !(n2 < alpha * size)) out.density_holds = false;
  }

  if (static_cast<std::int64_t>(edges.size()) > kExactComponentEdges) return;
  const int m = static_cast<int>(edges.size());
  out.excess_subgraphs = 0;
  std::vector<int> parent(static_cast<std::size_t>(k));
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t emask = 1; emask < (1u << m); ++emask) {
    const int ne = std::popcount(emask);
    std::uint32_t vmask = 0;
    for (int j = 0; j < m; ++j) {
      if (emask >> j & 1u) vmask |= (1u << edges[j].first) | (1u << edges[j].second);
    }
    const int nv = std::popcount(vmask);
    if (ne <= nv) continue;
    for (int i = 0; i < k; ++i) parent[i] = i;
    int parts = nv;
    for (int j = 0; j < m; ++j) {
      if (!(emask >> j & 1u)) continue;
      const int a = find(edges[j].first);
      const int b = find(edges[j].second);
      if (a != b) {
        parent[a] = b;
        --parts;
      }
    }
    if (parts == 1) ++out.excess_subgraphs;
  }
}

}  // namespace

TripleCount CountCherries(const Graph& g, const DegreeSequence& d,
                          bool with_witnesses) {
  CheckDegrees(g, d);
  TripleCount out;
  std::vector<Vertex> leaves;
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    leaves.clear();
    for (Vertex x : g.neighbors(w)) {
      if (g.degree(x) == 1) leaves.push_back(x);
    }
    const auto k = static_cast<std::int64_t>(leaves.size());
    out.count += k * (k - 1) / 2;
    if (!with_witnesses) continue;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        out.witnesses.push_back({leaves[i], leaves[j], w});
      }
    }
  }
  return out;
}

TripleCount CountPendantTriangles(const Graph& g, const DegreeSequence& d,
                                  bool with_witnesses) {
  CheckDegrees(g, d);
  TripleCount out;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (g.degree(x) != 2) continue;
    const Vertex y = g.neighbors(x)[0];
    const Vertex z = g.neighbors(x)[1];
    if (!g.HasEdge(y, z)) continue;
    // Count from the smallest degree-2 corner only.
    if ((g.degree(y) == 2 && y < x) || (g.degree(z) == 2 && z < x)) continue;
    if (g.degree(y) != 2 && g.degree(z) != 2) continue;
    ++out.count;
    if (with_witnesses) {
      std::array<Vertex, 3> t{x, y, z};
      std::sort(t.begin(), t.end());
      out.witnesses.push_back({t[0], t[1], t[2]});
    }
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  return out;
}

Deg1Structure Deg1(const Graph& g, const DegreeSequence& d) {
  CheckDegrees(g, d);
  Deg1Structure out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::int64_t leaves = 0;
    for (Vertex w : g.neighbors(v)) {
      if (g.degree(w) != 1) continue;
      ++leaves;
      if (g.degree(v) == 1 && v < w) ++out.adjacent_deg1_pairs;
    }
    out.max_deg1_neighbors = std::max(out.max_deg1_neighbors, leaves);
  }
  return out;
}

std::optional<std::int64_t> MinHighOnDeg1Path(const Graph& g,
                                              const DegreeSequence& d) {
  CheckDegrees(g, d);
  return MinHighBetweenLeaves(g);
}

std::optional<FewHighCycle> FindFewHighCycle(const Graph& g,
                                             const DegreeSequence& d) {
  CheckDegrees(g, d);
  const Vertex n = g.num_vertices();

  // (a) a component that is a cycle of degree-2 vertices.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2 || seen[v]) continue;
    const ChainEnd fwd = WalkChain(g, v, g.neighbors(v)[0]);
    seen[v] = 1;
    for (Vertex x : fwd.interior) seen[x] = 1;
    if (fwd.end == v) {
      FewHighCycle c;
      c.cycle.push_back(v);
      c.cycle.insert(c.cycle.end(), fwd.interior.begin(), fwd.interior.end());
      return c;
    }
    const ChainEnd back = WalkChain(g, v, g.neighbors(v)[1]);
    for (Vertex x : back.interior) seen[x] = 1;
  }

  // (b) a chain leaving and re-entering the same high vertex; (c) two
  // chains joining the same pair of high vertices. Chains are recorded from
  // their smaller endpoint so each is seen once.
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> first_chain;
  for (Vertex h = 0; h < n; ++h) {
    if (!High(g, h)) continue;
    for (Vertex x : g.neighbors(h)) {
      const ChainEnd c = WalkChain(g, h, x);
      if (!High(g, c.end)) continue;
      if (c.end == h) {
        FewHighCycle out;
        out.cycle.push_back(h);
        out.cycle.insert(out.cycle.end(), c.interior.begin(), c.interior.end());
        out.high_vertices = 1;
        return out;
      }
      if (c.end < h) continue;
      auto [it, inserted] = first_chain.try_emplace({h, c.end}, c.interior);
      if (inserted) continue;
      FewHighCycle out;
      out.high_vertices = 2;
      out.cycle.push_back(h);
      out.cycle.insert(out.cycle.end(), it->second.begin(), it->second.end());
      out.cycle.push_back(c.end);
      out.cycle.insert(out.cycle.end(), c.interior.rbegin(), c.interior.rend());
      return out;
    }
  }
  return std::nullopt;
}

std::vector<ExcessComponent> ExcessSubgraphReport(const Graph& g,
                                                  const DegreeSequence& d,
                                                  double alpha) {
  CheckDegrees(g, d);
  if (!(alpha > 0 && alpha < 1)) {
    throw Error(Errc::kInvalidArgument, "alpha must lie in (0,1)");
  }
  const Components comps = ConnectedComponents(g);
  std::vector<std::vector<Vertex>> members(comps.count());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    members[comps.component[v]].push_back(v);
  }
  std::vector<ExcessComponent> out;
  for (std::size_t c = 0; c < comps.count(); ++c) {
    const ComponentInfo& info = comps.info[c];
    if (info.num_edges <= info.num_vertices) continue;
    ExcessComponent row;
    row.component = static_cast<std::int32_t>(c);
    row.vertices = info.num_vertices;
    row.edges = info.num_edges;
    for (Vertex v : members[c]) {
      row.n1 += g.degree(v) == 1;
      row.n2 += g.degree(v) == 2;
    }
    const double cap = alpha * static_cast<double>(row.vertices);
    row.n1_below_alpha = static_cast<double>(row.n1) < cap;
    row.n2_below_alpha = static_cast<double>(row.n2) < cap;
    if (row.vertices <= kExactComponentVertices) {
      ExactExcess(g, members[c], alpha, row);
    }
    out.push_back(row);
  }
  return out;
}

LengthScaleValues LengthScales(const DegreeSequence& d, double c1, double c2,
                               double alpha) {
  if (!(c1 > 0) || !(c2 > 0) || !(alpha > 0 && alpha < 1)) {
    throw Error(Errc::kInvalidArgument, "need C1, C2 > 0 and 0 < alpha < 1");
  }
  const DegreeStats& s = d.stats();
  const double m1 = s.Md(1);
  const double n = static_cast<double>(s.n);
  const double delta2 = std::pow(static_cast<double>(s.max_degree), 2);
  const double top = m1 / delta2;
  if (!(top > 1)) {
    throw Error(Errc::kDegenerate, "M_1 / Delta^2 <= 1");
  }
  const double arg1 = c1 * n * delta2 / m1;
  if (!(arg1 > 1)) {
    throw Error(Errc::kDegenerate, "C_1 n Delta^2 / M_1 <= 1");
  }
  LengthScaleValues out;
  out.l1 = std::log(top) / std::log(arg1);
  auto l2 = [&](std::int64_t ni, const char* name) {
    if (ni == 0) return 0.0;
    const double arg = m1 / (c2 * delta2 * std::pow(static_cast<double>(ni), alpha) *
                             std::pow(n, 1 - alpha));
    if (!(arg > 1)) {
      throw Error(Errc::kDegenerate,
                  std::string("M_1 / (C_2 Delta^2 ") + name +
                      "^alpha n^(1-alpha)) <= 1");
    }
    return std::log(top) / std::log(arg);
  };
  out.l2_1 = l2(s.n1, "n_1");
  out.l2_2 = l2(s.n2, "n_2");
  return out;
}

bool TreeBranchCheck(const Graph& t) {
  if (t.num_vertices() < 2 || t.num_edges() != t.num_vertices() - 1 ||
      !IsConnected(t)) {
    throw Error(Errc::kNotATree, "input is not a tree on >= 2 vertices");
  }
  const auto min_high = MinHighBetweenLeaves(t);
  return min_high && *min_high >= 2;
}

MotifReport Analyze(const Graph& g, const DegreeSequence& d, double alpha) {
  MotifReport r;
  r.cherries = CountCherries(g, d);
  r.pendant_triangles = CountPendantTriangles(g, d);
  r.deg1 = Deg1(g, d);
  r.min_high_on_deg1_path = MinHighOnDeg1Path(g, d);
  r.few_high_cycle = FindFewHighCycle(g, d);
  r.excess_components = ExcessSubgraphReport(g, d, alpha);
  return r;
}

}  // namespace degsym::motifs
