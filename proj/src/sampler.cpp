#include "degsym/sampler.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <optional>
#include <queue>

#include "degsym/error.hpp"

namespace degsym {

std::string SampleKindName(SampleKind kind) {
  switch (kind) {
    case SampleKind::kRejectionPairing: return "rejection";
    case SampleKind::kSwitchChain: return "switch";
    case SampleKind::kAuto: return "auto";
  }
  return "auto";
}

SampleKind ParseSampleKind(const std::string& name) {
  if (name == "rejection") return SampleKind::kRejectionPairing;
  if (name == "switch") return SampleKind::kSwitchChain;
  if (name == "auto") return SampleKind::kAuto;
  throw Error(Errc::kInvalidArgument,
              "unknown sample method '" + name + "' (auto|rejection|switch)");
}

double PairingAcceptanceEstimate(const DegreeSequence& d) {
  const double lambda = d.stats().Md(2) / (2.0 * d.stats().Md(1));
  return std::exp(-lambda - lambda * lambda);
}

namespace {

std::vector<Vertex> HalfEdgePoints(const DegreeSequence& d) {
  std::vector<Vertex> points;
  points.reserve(static_cast<std::size_t>(d.stats().M(1)));
  for (std::size_t v = 0; v < d.size(); ++v) {
    points.insert(points.end(), static_cast<std::size_t>(d[v]),
                  static_cast<Vertex>(v));
  }
  return points;
}

// Repeated pairing rounds that abort at the first loop or repeated pair.
class PairingSampler {
 public:
  explicit PairingSampler(const DegreeSequence& d)
      : n_(static_cast<Vertex>(d.size())), points_(HalfEdgePoints(d)) {
    offset_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (Vertex v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + d[v];
    fill_.assign(static_cast<std::size_t>(n_), 0);
    slots_.assign(points_.size(), 0);
  }

  std::optional<Graph> Round(CounterRng& rng) {
    const std::size_t m = points_.size();
    std::fill(fill_.begin(), fill_.end(), 0);
    pairs_.clear();
    for (std::size_t i = 0; i < m; i += 2) {
      const std::size_t j = i + 1 + rng.Below(m - i - 1);
      std::swap(points_[i + 1], points_[j]);
      const Vertex u = points_[i];
      const Vertex v = points_[i + 1];
      if (u == v || Adjacent(u, v)) return std::nullopt;
      slots_[offset_[u] + fill_[u]++] = v;
      slots_[offset_[v] + fill_[v]++] = u;
      pairs_.push_back(Edge::Of(u, v));
    }
    return Graph::FromEdges(n_, pairs_);
  }

 private:
  bool Adjacent(Vertex u, Vertex v) const {
    if (fill_[u] > fill_[v]) std::swap(u, v);
    const Vertex* begin = slots_.data() + offset_[u];
    return std::find(begin, begin + fill_[u], v) != begin + fill_[u];
  }

  Vertex n_;
  std::vector<Vertex> points_;
  std::vector<std::int64_t> offset_;
  std::vector<std::int32_t> fill_;
  std::vector<Vertex> slots_;
  std::vector<Edge> pairs_;
};

Graph RunSwitchChain(const DegreeSequence& d, std::int64_t steps,
                     CounterRng& rng) {
  SwitchChain chain(HavelHakimi(d));
  chain.Run(steps, rng);
  return chain.ToGraph();
}

}  // namespace

PairingOutcome PairingRound(const DegreeSequence& d, CounterRng& rng) {
  return PairingRound(d.degrees(), rng);
}

PairingOutcome PairingRound(std::span<const Degree> degrees, CounterRng& rng) {
  std::vector<Vertex> points;
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    if (degrees[v] < 0) {
      throw Error(Errc::kInvalidArgument, "negative degree");
    }
    points.insert(points.end(), static_cast<std::size_t>(degrees[v]),
                  static_cast<Vertex>(v));
  }
  if (points.size() % 2 != 0) {
    throw Error(Errc::kOddSum, "odd number of half-edge points");
  }
  PairingOutcome out;
  out.simple = true;
  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; i += 2) {
    const std::size_t j = i + 1 + rng.Below(m - i - 1);
    std::swap(points[i + 1], points[j]);
    const Vertex u = points[i];
    const Vertex v = points[i + 1];
    out.pairs.push_back(u == v ? Edge{u, v} : Edge::Of(u, v));
  }
  std::vector<Edge> sorted = out.pairs;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].u == sorted[i].v ||
        (i > 0 && sorted[i] == sorted[i - 1])) {
      out.simple = false;
      break;
    }
  }
  return out;
}

SampleResult SampleDetailed(const DegreeSequence& d, const SampleMethod& method,
                            std::uint64_t seed) {
  CounterRng rng(seed);
  SampleResult result;
  const std::int64_t steps =
      method.steps > 0 ? method.steps
                       : 20 * static_cast<std::int64_t>(d.stats().M(1));

  bool use_rejection = method.kind != SampleKind::kSwitchChain;
  if (method.kind == SampleKind::kAuto &&
      PairingAcceptanceEstimate(d) < 1e-4) {
    use_rejection = false;
  }

  if (use_rejection) {
    PairingSampler sampler(d);
    for (std::int64_t round = 1; round <= method.rejection_budget; ++round) {
      if (auto g = sampler.Round(rng)) {
        result.graph = std::move(*g);
        result.used = SampleKind::kRejectionPairing;
        result.rounds = round;
        assert(result.graph.DegreeArray() ==
               std::vector<Degree>(d.degrees().begin(), d.degrees().end()));
        return result;
      }
    }
    if (method.kind == SampleKind::kRejectionPairing) {
      throw Error(Errc::kRejectionBudgetExceeded,
                  "no simple pairing within " +
                      std::to_string(method.rejection_budget) +
                      " rounds; use the switch chain");
    }
  }

  result.graph = RunSwitchChain(d, steps, rng);
  result.used = SampleKind::kSwitchChain;
  result.approximate = true;
  result.rounds = steps;
  assert(result.graph.DegreeArray() ==
         std::vector<Degree>(d.degrees().begin(), d.degrees().end()));
  return result;
}

Graph Sample(const DegreeSequence& d, const SampleMethod& method,
             std::uint64_t seed) {
  return SampleDetailed(d, method, seed).graph;
}

Graph HavelHakimi(const DegreeSequence& d) {
  const auto n = static_cast<Vertex>(d.size());
  // Max-heap keyed by (residual degree, -label) for a deterministic result.
  using Item = std::pair<Degree, Vertex>;
  auto cmp = [](const Item& a, const Item& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
  for (Vertex v = 0; v < n; ++v) heap.push({d[v], v});
  std::vector<Edge> edges;
  std::vector<Item> taken;
  while (!heap.empty()) {
    auto [r, v] = heap.top();
    heap.pop();
    if (r == 0) continue;
    taken.clear();
    for (Degree k = 0; k < r; ++k) {
      if (heap.empty() || heap.top().first == 0) {
        throw Error(Errc::kNotGraphical, "Havel-Hakimi failed");
      }
      taken.push_back(heap.top());
      heap.pop();
    }
    for (auto [rw, w] : taken) {
      edges.push_back(Edge::Of(v, w));
      if (rw > 1) heap.push({rw - 1, w});
    }
  }
  return Graph::FromEdges(n, edges);
}

SwitchChain::SwitchChain(const Graph& g)
    : n_(g.num_vertices()), edges_(g.Edges()) {
  adj_.resize(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) {
    auto nb = g.neighbors(v);
    adj_[v].assign(nb.begin(), nb.end());
  }
}

bool SwitchChain::Adjacent(Vertex u, Vertex v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), target) != a.end();
}

void SwitchChain::Replace(Vertex v, Vertex from, Vertex to) {
  *std::find(adj_[v].begin(), adj_[v].end(), from) = to;
}

bool SwitchChain::TrySwitch(std::size_t i, std::size_t j, bool flip) {
  if (i == j) return false;
  const Vertex a = edges_[i].u;
  const Vertex b = edges_[i].v;
  const Vertex c = flip ? edges_[j].v : edges_[j].u;
  const Vertex d = flip ? edges_[j].u : edges_[j].v;
  if (a == c || b == d || Adjacent(a, c) || Adjacent(b, d)) return false;
  Replace(a, b, c);
  Replace(b, a, d);
  Replace(c, d, a);
  Replace(d, c, b);
  edges_[i] = Edge::Of(a, c);
  edges_[j] = Edge::Of(b, d);
  return true;
}

bool SwitchChain::Step(CounterRng& rng) {
  const std::size_t m = edges_.size();
  if (m < 2) return false;
  const std::size_t i = rng.Below(m);
  const std::size_t j = rng.Below(m);
  const bool flip = rng.Coin();
  return TrySwitch(i, j, flip);
}

void SwitchChain::Run(std::int64_t steps, CounterRng& rng) {
  for (std::int64_t s = 0; s < steps; ++s) Step(rng);
}

Graph SwitchChain::ToGraph() const { return Graph::FromEdges(n_, edges_); }

Graph SwitchStep(const Graph& g, CounterRng& rng) {
  SwitchChain chain(g);
  chain.Step(rng);
  return chain.ToGraph();
}

}  // namespace degsym
