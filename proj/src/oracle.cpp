#include "degsym/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "degsym/error.hpp"

namespace degsym::oracle {
namespace {

// Rows are processed in a fixed order; vertex order[i] picks its remaining
// neighbors among order[i+1..]. Edges among unprocessed vertices are never
// decided early, so the residual sequence being graphical is exactly the
// condition for the branch to be completable.
class Enumerator {
 public:
  Enumerator(std::span<const Degree> degrees, std::int64_t limit,
             bool keep_graphs)
      : n_(static_cast<Vertex>(degrees.size())),
        residual_(degrees.begin(), degrees.end()),
        limit_(limit),
        keep_graphs_(keep_graphs) {
    order_.resize(degrees.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return degrees[a] > degrees[b];
    });
  }

  // Returns false if the limit was hit.
  bool Run() {
    if (!IsGraphical(residual_)) return true;
    return Row(0);
  }

  std::int64_t count() const { return count_; }
  std::vector<Graph>& graphs() { return graphs_; }

 private:
  bool Row(std::size_t i) {
    if (i == order_.size()) {
      ++count_;
      if (keep_graphs_) graphs_.push_back(Graph::FromEdges(n_, edges_));
      return count_ < limit_;
    }
    const Vertex v = order_[i];
    return Choose(i, v, i + 1, residual_[v]);
  }

  bool Choose(std::size_t i, Vertex v, std::size_t from, Degree need) {
    if (need == 0) {
      if (!ResidualGraphical(i + 1)) return true;
      return Row(i + 1);
    }
    for (std::size_t j = from; j < order_.size(); ++j) {
      if (order_.size() - j < static_cast<std::size_t>(need)) break;
      const Vertex w = order_[j];
      if (residual_[w] == 0) continue;
      --residual_[w];
      edges_.push_back(Edge::Of(v, w));
      const bool go_on = Choose(i, v, j + 1, need - 1);
      edges_.pop_back();
      ++residual_[w];
      if (!go_on) return false;
    }
    return true;
  }

  bool ResidualGraphical(std::size_t from) {
    scratch_.clear();
    for (std::size_t j = from; j < order_.size(); ++j) {
      scratch_.push_back(residual_[order_[j]]);
    }
    return IsGraphical(scratch_);
  }

  Vertex n_;
  std::vector<Degree> residual_;
  std::vector<Vertex> order_;
  std::vector<Edge> edges_;
  std::vector<Degree> scratch_;
  std::vector<Graph> graphs_;
  std::int64_t count_ = 0;
  std::int64_t limit_;
  bool keep_graphs_;
};

bool ContainsAll(const Graph& g, std::span<const Edge> h) {
  return std::all_of(h.begin(), h.end(),
                     [&](const Edge& e) { return g.HasEdge(e.u, e.v); });
}

// Assigns images vertex by vertex within degree classes, checking adjacency
// against every earlier assignment. Calls visit on each full automorphism;
// visit returns false to stop.
void ForEachAutomorphism(const Graph& g,
                         const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  bool stop = false;
  std::function<void(Vertex)> assign = [&](Vertex v) {
    if (stop) return;
    if (v == n) {
      if (!visit(image)) stop = true;
      return;
    }
    for (Vertex w = 0; w < n && !stop; ++w) {
      if (used[w] || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) {
        ok = g.HasEdge(u, v) == g.HasEdge(image[u], w);
      }
      if (!ok) continue;
      used[w] = 1;
      image[v] = w;
      assign(v + 1);
      used[w] = 0;
    }
  };
  assign(0);
}

bool IsIdentityImage(const std::vector<Vertex>& image) {
  for (std::size_t v = 0; v < image.size(); ++v) {
    if (image[v] != static_cast<Vertex>(v)) return false;
  }
  return true;
}

}  // namespace

std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Realizations Enumerate(const DegreeSequence& d,
                       const EnumerateOptions& options) {
  const auto m1 = static_cast<std::int64_t>(d.stats().M(1));
  if (m1 > options.max_m1) {
    throw Error(Errc::kBudgetExceeded,
                "M_1 = " + std::to_string(m1) + " exceeds the enumeration cap " +
                    std::to_string(options.max_m1));
  }
  Enumerator e(d.degrees(), options.max_realizations + 1, true);
  e.Run();
  if (e.count() > options.max_realizations) {
    throw Error(Errc::kBudgetExceeded,
                "more than " + std::to_string(options.max_realizations) +
                    " realizations");
  }
  Realizations out;
  out.degrees.assign(d.degrees().begin(), d.degrees().end());
  out.graphs = std::move(e.graphs());
  return out;
}

std::int64_t CountRealizations(std::span<const Degree> degrees,
                               std::int64_t limit) {
  if (limit <= 0) return 0;
  for (Degree x : degrees) {
    if (x < 0) return 0;
  }
  Enumerator e(degrees, limit, false);
  e.Run();
  return e.count();
}

BigInt ExhaustiveGroupOrder(const Graph& g) {
  BigInt count = 0;
  ForEachAutomorphism(g, [&](const std::vector<Vertex>&) {
    ++count;
    return true;
  });
  return count;
}

bool ExhaustiveIsSymmetric(const Graph& g) {
  bool found = false;
  ForEachAutomorphism(g, [&](const std::vector<Vertex>& image) {
    found = !IsIdentityImage(image);
    return !found;
  });
  return found;
}

std::int64_t CountCherriesDirect(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::int64_t count = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != 1) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.degree(v) != 1) continue;
      for (Vertex w = 0; w < n; ++w) {
        if (g.HasEdge(u, w) && g.HasEdge(v, w)) ++count;
      }
    }
  }
  return count;
}

std::int64_t CountPendantTrianglesDirect(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::int64_t count = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.HasEdge(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (!g.HasEdge(a, c) || !g.HasEdge(b, c)) continue;
        const int twos = (g.degree(a) == 2) + (g.degree(b) == 2) +
                         (g.degree(c) == 2);
        if (twos >= 2) ++count;
      }
    }
  }
  return count;
}

Rational ExactPSymmetric(const DegreeSequence& d,
                         const EnumerateOptions& options) {
  const Realizations r = Enumerate(d, options);
  std::int64_t symmetric = 0;
  for (const Graph& g : r.graphs) symmetric += ExhaustiveIsSymmetric(g);
  return Rational(symmetric, static_cast<std::int64_t>(r.count()));
}

Rational ExactExpectation(const Realizations& r, const Statistic& stat) {
  const Vertex n = static_cast<Vertex>(r.degrees.size());
  for (const Edge& e : stat.edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v) {
      throw Error(Errc::kInvalidArgument, "statistic edge outside [0,n)");
    }
  }
  if (stat.kind == StatisticKind::kEdge && stat.edges.size() != 1) {
    throw Error(Errc::kInvalidArgument, "edge statistic needs one edge");
  }
  std::int64_t total = 0;
  for (const Graph& g : r.graphs) {
    switch (stat.kind) {
      case StatisticKind::kCherries:
        total += CountCherriesDirect(g);
        break;
      case StatisticKind::kPendantTriangles:
        total += CountPendantTrianglesDirect(g);
        break;
      case StatisticKind::kEdge:
      case StatisticKind::kSubgraph:
        total += ContainsAll(g, stat.edges);
        break;
    }
  }
  return Rational(total, static_cast<std::int64_t>(r.count()));
}

Rational ExactExpectation(const DegreeSequence& d, const Statistic& stat,
                          const EnumerateOptions& options) {
  return ExactExpectation(Enumerate(d, options), stat);
}

Rational ExactConditionalEdgeProbability(const Realizations& r, Vertex u,
                                        Vertex v, std::span<const Edge> c) {
  const Edge uv = Edge::Of(u, v);
  if (std::find(c.begin(), c.end(), uv) != c.end()) {
    throw Error(Errc::kEdgeInC, "edge {" + std::to_string(uv.u) + "," +
                                    std::to_string(uv.v) + "} is in C");
  }
  std::int64_t with_c = 0;
  std::int64_t with_both = 0;
  for (const Graph& g : r.graphs) {
    if (!ContainsAll(g, c)) continue;
    ++with_c;
    with_both += g.HasEdge(uv.u, uv.v);
  }
  if (with_c == 0) {
    throw Error(Errc::kDegenerate, "no realization contains C");
  }
  return Rational(with_both, with_c);
}

std::vector<std::vector<Degree>> StandardCorpus() {
  std::vector<std::vector<Degree>> out = {
      {1, 1}, {2, 2, 2}, {3, 1, 1, 1}, {4, 1, 1, 1, 1},
  };
  std::vector<Degree> cur;
  std::function<void(int, Degree, int)> extend = [&](int left, Degree cap,
                                                     int sum) {
    if (cur.size() >= 4 && sum % 2 == 0 && sum <= 16) {
      const std::int64_t c = CountRealizations(cur, 1501);
      if (c >= 2 && c <= 1500) out.push_back(cur);
    }
    if (left == 0) return;
    for (Degree x = cap; x >= 1; --x) {
      if (sum + x > 16) continue;
      cur.push_back(x);
      extend(left - 1, x, sum + x);
      cur.pop_back();
    }
  };
  extend(8, 7, 0);
  return out;
}

EdgeBoundCalibration CalibrateEdgeBound(
    const std::vector<std::vector<Degree>>& corpus) {
  EdgeBoundCalibration best;
  for (const auto& raw : corpus) {
    const DegreeSequence d = DegreeSequence::Validate(raw);
    const Realizations r = Enumerate(d);
    const Vertex n = static_cast<Vertex>(d.size());
    const double m1 = d.stats().Md(1);
    const double delta2 = std::pow(static_cast<double>(d.stats().max_degree), 2);

    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    }
    // has[p][i]: realization i contains pair p.
    std::vector<std::vector<char>> has(pairs.size(),
                                       std::vector<char>(r.count(), 0));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      for (std::size_t i = 0; i < r.count(); ++i) {
        has[p][i] = r.graphs[i].HasEdge(pairs[p].u, pairs[p].v);
      }
    }
    auto consider = [&](std::int64_t hits, int q, std::vector<Edge> h) {
      ++best.subgraphs_checked;
      if (hits == 0) return;
      const double p = static_cast<double>(hits) / static_cast<double>(r.count());
      const double c = std::pow(p, 1.0 / q) * m1 / delta2;
      if (c > best.constant) {
        best.constant = c;
        best.worst_sequence = raw;
        best.worst_subgraph = std::move(h);
      }
    };
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      const auto hits_a = std::count(has[a].begin(), has[a].end(), 1);
      consider(hits_a, 1, {pairs[a]});
      for (std::size_t b = a + 1; b < pairs.size(); ++b) {
        std::int64_t hits = 0;
        for (std::size_t i = 0; i < r.count(); ++i) hits += has[a][i] & has[b][i];
        consider(hits, 2, {pairs[a], pairs[b]});
      }
    }
  }
  return best;
}

}  // namespace degsym::oracle
