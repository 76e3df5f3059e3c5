#include "degsym/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "degsym/error.hpp"

namespace degsym {

Graph Graph::FromEdges(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw Error(Errc::kLabelOutOfRange, "negative vertex count");
  Graph g;
  g.n_ = n;
  std::vector<std::int64_t> deg(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(Errc::kLabelOutOfRange,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} outside [0," + std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw Error(Errc::kSelfLoop, "loop at vertex " + std::to_string(e.u));
    }
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.neighbors_.resize(static_cast<std::size_t>(g.offsets_[n]));
  std::vector<std::int64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.neighbors_[fill[e.u]++] = e.v;
    g.neighbors_[fill[e.v]++] = e.u;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto first = g.neighbors_.begin() + g.offsets_[v];
    auto last = g.neighbors_.begin() + g.offsets_[v + 1];
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last);
    if (dup != last) {
      throw Error(Errc::kDuplicateEdge, "edge {" + std::to_string(v) + "," +
                                            std::to_string(*dup) +
                                            "} listed twice");
    }
  }
  return g;
}

std::vector<Degree> Graph::DegreeArray() const {
  std::vector<Degree> out(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges()));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Components ConnectedComponents(const Graph& g) {
  const Vertex n = g.num_vertices();
  Components c;
  c.component.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (c.component[s] >= 0) continue;
    const auto id = static_cast<std::int32_t>(c.info.size());
    ComponentInfo info;
    std::int64_t degree_sum = 0;
    c.component[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++info.num_vertices;
      degree_sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) {
        if (c.component[w] < 0) {
          c.component[w] = id;
          stack.push_back(w);
        }
      }
    }
    info.num_edges = degree_sum / 2;
    c.info.push_back(info);
  }
  return c;
}

bool IsConnected(const Graph& g) {
  return ConnectedComponents(g).count() <= 1;
}

Subgraph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.original.assign(vertices.begin(), vertices.end());
  std::sort(sub.original.begin(), sub.original.end());
  sub.original.erase(std::unique(sub.original.begin(), sub.original.end()),
                     sub.original.end());
  std::vector<Vertex> index(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < sub.original.size(); ++i) {
    const Vertex v = sub.original[i];
    if (v < 0 || v >= g.num_vertices()) {
      throw Error(Errc::kLabelOutOfRange,
                  "vertex " + std::to_string(v) + " not in graph");
    }
    index[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex v : sub.original) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && index[w] >= 0) edges.push_back({index[v], index[w]});
    }
  }
  sub.graph = Graph::FromEdges(static_cast<Vertex>(sub.original.size()), edges);
  return sub;
}

Subgraph TwoCore(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<Degree> deg = g.DegreeArray();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] <= 1) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] <= 1) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  return InducedSubgraph(g, keep);
}

std::string FormatEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.Edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph ParseEdgeList(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      out = out.substr(0, out.find('#'));
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) {
    return Error(Errc::kParse, "edge list line " + std::to_string(line_no) +
                                   ": " + what);
  };
  if (!next_line(line)) throw fail("missing header 'n m'");
  long long n = 0;
  long long m = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0) {
      throw fail("malformed header '" + line + "'");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) throw fail("expected " + std::to_string(m) + " edges");
    std::istringstream ls(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) {
      throw fail("malformed edge '" + line + "'");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (next_line(line)) throw fail("trailing content after " + std::to_string(m) + " edges");
  return Graph::FromEdges(static_cast<Vertex>(n), edges);
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParse, "cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseEdgeList(buffer.str());
}

void WriteEdgeListFile(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::kParse, "cannot write '" + path + "'");
  out << FormatEdgeList(g);
}

}  // namespace degsym
