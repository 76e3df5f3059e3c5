#include "degsym/permutation.hpp"

#include <numeric>
#include <sstream>

#include "degsym/error.hpp"

namespace degsym {

Permutation Permutation::Identity(Vertex n) {
  std::vector<Vertex> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::FromImage(std::vector<Vertex> image) {
  const auto n = static_cast<Vertex>(image.size());
  std::vector<char> seen(image.size(), 0);
  for (Vertex v : image) {
    if (v < 0 || v >= n || seen[v]) {
      throw Error(Errc::kInvalidArgument, "image is not a bijection on [0," +
                                              std::to_string(n) + ")");
    }
    seen[v] = 1;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::FromCycles(
    Vertex n, const std::vector<std::vector<Vertex>>& cycles) {
  std::vector<Vertex> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex v = cycle[i];
      if (v < 0 || v >= n || used[v]) {
        throw Error(Errc::kInvalidArgument,
                    "cycles must be disjoint and within [0," +
                        std::to_string(n) + ")");
      }
      used[v] = 1;
      image[v] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(image));
}

std::vector<std::vector<Vertex>> Permutation::Cycles() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(image_.size(), 0);
  for (Vertex v = 0; v < size(); ++v) {
    if (seen[v] || image_[v] == v) continue;
    std::vector<Vertex> cycle;
    for (Vertex w = v; !seen[w]; w = image_[w]) {
      seen[w] = 1;
      cycle.push_back(w);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Vertex> Permutation::Support() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    if (image_[v] != v) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> Permutation::FixedPoints() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    if (image_[v] == v) out.push_back(v);
  }
  return out;
}

bool Permutation::IsIdentity() const {
  for (Vertex v = 0; v < size(); ++v) {
    if (image_[v] != v) return false;
  }
  return true;
}

Permutation Permutation::Inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (Vertex v = 0; v < size(); ++v) inv[image_[v]] = v;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::kInvalidArgument, "composing permutations of different size");
  }
  std::vector<Vertex> image(static_cast<std::size_t>(a.size()));
  for (Vertex v = 0; v < a.size(); ++v) image[v] = a(b(v));
  return Permutation(std::move(image));
}

std::string Permutation::ToCycleString() const {
  const auto cycles = Cycles();
  if (cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cycles) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      out << (i ? " " : "") << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

Graph ApplyPermutation(const Graph& g, const Permutation& sigma) {
  if (sigma.size() != g.num_vertices()) {
    throw Error(Errc::kInvalidArgument, "permutation size differs from graph order");
  }
  std::vector<Edge> edges = g.Edges();
  for (Edge& e : edges) e = Edge::Of(sigma(e.u), sigma(e.v));
  return Graph::FromEdges(g.num_vertices(), edges);
}

bool IsAutomorphism(const Graph& g, const Permutation& sigma) {
  if (sigma.size() != g.num_vertices()) return false;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (g.degree(u) != g.degree(sigma(u))) return false;
  }
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && !g.HasEdge(sigma(u), sigma(v))) return false;
    }
  }
  return true;
}

}  // namespace degsym
