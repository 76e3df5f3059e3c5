#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "degsym/degree_sequence.hpp"

namespace degsym {

using Vertex = std::int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  // Normalized so that u < v.
  static Edge Of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices [0, n) stored as CSR with each
// neighbor list sorted ascending. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws Error{kSelfLoop | kDuplicateEdge | kLabelOutOfRange}.
  static Graph FromEdges(Vertex n, std::span<const Edge> edges);

  Vertex num_vertices() const { return n_; }
  std::int64_t num_edges() const {
    return static_cast<std::int64_t>(neighbors_.size() / 2);
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }
  Degree degree(Vertex v) const {
    return static_cast<Degree>(offsets_[v + 1] - offsets_[v]);
  }
  std::vector<Degree> DegreeArray() const;

  // O(log degree).
  bool HasEdge(Vertex u, Vertex v) const;

  // Sorted lexicographically, u < v within each edge.
  std::vector<Edge> Edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  Vertex n_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<Vertex> neighbors_;
};

struct ComponentInfo {
  std::int64_t num_vertices = 0;
  std::int64_t num_edges = 0;
};

struct Components {
  // component[v] = index of the component containing v. Components are
  // numbered in order of their smallest vertex.
  std::vector<std::int32_t> component;
  std::vector<ComponentInfo> info;

  std::size_t count() const { return info.size(); }
};

Components ConnectedComponents(const Graph& g);
bool IsConnected(const Graph& g);

// A subgraph together with the original label of each of its vertices.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[i] = label in the parent graph
};

// Induced subgraph on `vertices` (duplicates ignored); the i-th smallest
// selected vertex becomes vertex i.
Subgraph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices);

// Maximal subgraph with minimum degree >= 2 (possibly empty).
Subgraph TwoCore(const Graph& g);

// Edge-list text: header "n m", then m lines "u v" with u < v, sorted.
std::string FormatEdgeList(const Graph& g);
Graph ParseEdgeList(const std::string& text);
Graph ReadEdgeListFile(const std::string& path);
void WriteEdgeListFile(const std::string& path, const Graph& g);

}  // namespace degsym
