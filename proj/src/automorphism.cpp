#include "degsym/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "degsym/error.hpp"
#include "degsym/rng.hpp"

namespace degsym {

std::string VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kTrivial: return "trivial";
    case Verdict::kNontrivial: return "nontrivial";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

namespace {

using Trace = std::vector<std::uint64_t>;

struct BudgetExhausted {};

// Ordered partition of [0, n). Cells are contiguous ranges of `elems`,
// identified by their start position.
struct Partition {
  std::vector<Vertex> elems;
  std::vector<std::int32_t> pos;
  std::vector<std::int32_t> cell;      // vertex -> start of its cell
  std::vector<std::int32_t> cell_end;  // start -> one past the end
  std::int32_t num_cells = 0;

  bool Discrete() const {
    return num_cells == static_cast<std::int32_t>(elems.size());
  }

  std::int32_t FirstNonSingleton() const {
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(elems.size());
         c = cell_end[c]) {
      if (cell_end[c] - c > 1) return c;
    }
    return -1;
  }

  std::vector<Vertex> CellMembersSorted(std::int32_t c) const {
    std::vector<Vertex> out(elems.begin() + c, elems.begin() + cell_end[c]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

std::uint64_t HashStep(std::uint64_t h, std::uint64_t value) {
  return CounterRng::Mix64(h ^ (value + CounterRng::kGamma));
}

// Equitable refinement by neighbor counts. Fragments of a split cell are
// ordered by ascending count, so the result commutes with relabeling.
class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g),
        count_(static_cast<std::size_t>(g.num_vertices()), 0),
        in_queue_(static_cast<std::size_t>(g.num_vertices()), 0) {}

  // Refines `p` starting from the given splitter cells. When `expected` is
  // set, the trace is compared on the fly and the call returns false at the
  // first divergence (leaving `p` in an unspecified state). Otherwise the
  // trace is appended to `record` (if non-null).
  bool Refine(Partition& p, const std::vector<std::int32_t>& splitters,
              const Trace* expected, Trace* record) {
    trace_index_ = 0;
    expected_ = expected;
    record_ = record;
    for (std::int32_t s : splitters) Enqueue(s);
    while (!queue_.empty()) {
      const std::int32_t s = queue_.front();
      queue_.pop_front();
      in_queue_[s] = 0;
      if (!SplitBy(p, s)) {
        ClearQueue();
        return false;
      }
    }
    if (!Emit(static_cast<std::uint64_t>(p.num_cells))) return false;
    return expected_ == nullptr || trace_index_ == expected_->size();
  }

 private:
  void Enqueue(std::int32_t s) {
    if (!in_queue_[s]) {
      in_queue_[s] = 1;
      queue_.push_back(s);
    }
  }

  void ClearQueue() {
    for (std::int32_t s : queue_) in_queue_[s] = 0;
    queue_.clear();
  }

  bool Emit(std::uint64_t value) {
    if (expected_ != nullptr) {
      if (trace_index_ >= expected_->size() ||
          (*expected_)[trace_index_] != value) {
        return false;
      }
    } else if (record_ != nullptr) {
      record_->push_back(value);
    }
    ++trace_index_;
    return true;
  }

  bool SplitBy(Partition& p, std::int32_t s) {
    touched_.clear();
    for (std::int32_t i = s; i < p.cell_end[s]; ++i) {
      for (Vertex w : g_.neighbors(p.elems[i])) {
        if (count_[w]++ == 0) touched_.push_back(w);
      }
    }
    std::sort(touched_.begin(), touched_.end(), [&](Vertex a, Vertex b) {
      if (p.cell[a] != p.cell[b]) return p.cell[a] < p.cell[b];
      return count_[a] < count_[b];
    });
    bool ok = true;
    for (std::size_t lo = 0; lo < touched_.size() && ok;) {
      const std::int32_t c = p.cell[touched_[lo]];
      std::size_t hi = lo;
      while (hi < touched_.size() && p.cell[touched_[hi]] == c) ++hi;
      ok = SplitCell(p, s, c, lo, hi);
      lo = hi;
    }
    for (Vertex w : touched_) count_[w] = 0;
    return ok;
  }

  // touched_[lo, hi) are the members of cell c with a neighbor in s, sorted
  // by count.
  bool SplitCell(Partition& p, std::int32_t s, std::int32_t c, std::size_t lo,
                 std::size_t hi) {
    const std::int32_t end = p.cell_end[c];
    const auto t = static_cast<std::int32_t>(hi - lo);
    std::uint64_t h = HashStep(HashStep(s, c), end - c);
    // Fragment layout: untouched (count 0) first, then runs of equal count.
    fragments_.clear();
    if (t < end - c) fragments_.push_back(c);
    for (std::size_t k = lo; k < hi; ++k) {
      if (k == lo || count_[touched_[k]] != count_[touched_[k - 1]]) {
        fragments_.push_back(end - t + static_cast<std::int32_t>(k - lo));
        h = HashStep(h, static_cast<std::uint64_t>(count_[touched_[k]]));
      }
    }
    h = HashStep(h, static_cast<std::uint64_t>(t));
    if (!Emit(h)) return false;
    if (fragments_.size() == 1) return true;

    for (std::size_t k = lo; k < hi; ++k) {
      const Vertex x = touched_[k];
      const std::int32_t target = end - t + static_cast<std::int32_t>(k - lo);
      const Vertex y = p.elems[target];
      const std::int32_t from = p.pos[x];
      p.elems[target] = x;
      p.pos[x] = target;
      p.elems[from] = y;
      p.pos[y] = from;
    }
    const bool was_queued = in_queue_[c] != 0;
    std::int32_t largest = -1;
    std::int32_t largest_size = -1;
    for (std::size_t f = 0; f < fragments_.size(); ++f) {
      const std::int32_t start = fragments_[f];
      const std::int32_t stop =
          f + 1 < fragments_.size() ? fragments_[f + 1] : end;
      p.cell_end[start] = stop;
      for (std::int32_t i = start; i < stop; ++i) p.cell[p.elems[i]] = start;
      if (stop - start > largest_size) {
        largest_size = stop - start;
        largest = start;
      }
    }
    p.num_cells += static_cast<std::int32_t>(fragments_.size()) - 1;
    for (std::int32_t start : fragments_) {
      if (was_queued ? start != c : start != largest) Enqueue(start);
    }
    return true;
  }

  const Graph& g_;
  std::vector<std::int32_t> count_;
  std::vector<char> in_queue_;
  std::deque<std::int32_t> queue_;
  std::vector<Vertex> touched_;
  std::vector<std::int32_t> fragments_;
  const Trace* expected_ = nullptr;
  Trace* record_ = nullptr;
  std::size_t trace_index_ = 0;
};

// Splits {v} off the front of its cell; returns the new singleton's start.
std::int32_t Individualize(Partition& p, Vertex v) {
  const std::int32_t c = p.cell[v];
  const std::int32_t end = p.cell_end[c];
  const Vertex front = p.elems[c];
  const std::int32_t from = p.pos[v];
  p.elems[c] = v;
  p.pos[v] = c;
  p.elems[from] = front;
  p.pos[front] = from;
  p.cell_end[c] = c + 1;
  p.cell_end[c + 1] = end;
  for (std::int32_t i = c + 1; i < end; ++i) p.cell[p.elems[i]] = c + 1;
  ++p.num_cells;
  return c;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), failed_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    failed_[a] = failed_[a] || failed_[b];
  }
  std::size_t Size(std::size_t x) { return size_[Find(x)]; }
  bool Failed(std::size_t x) { return failed_[Find(x)] != 0; }
  void MarkFailed(std::size_t x) { failed_[Find(x)] = 1; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<char> failed_;
};

class Search {
 public:
  Search(const Graph& g, std::int64_t budget)
      : g_(g), refiner_(g), budget_(budget) {
    BuildFirstPath();
  }

  std::int64_t nodes() const { return nodes_; }
  std::size_t depth() const { return fixed_.size(); }

  // Looks for an automorphism fixing the first-path vertices above `level`
  // (1-based) and mapping the level's vertex to w.
  std::optional<Permutation> MapLevel(std::size_t level, Vertex w) {
    Partition p = path_[level - 1];
    return Descend(level, p, w);
  }

  Vertex FixedAt(std::size_t level) const { return fixed_[level - 1]; }

  std::vector<Vertex> TargetCell(std::size_t level) const {
    return path_[level - 1].CellMembersSorted(target_[level - 1]);
  }

 private:
  void Charge() {
    if (++nodes_ > budget_) throw BudgetExhausted{};
  }

  void BuildFirstPath() {
    const Vertex n = g_.num_vertices();
    Partition p;
    p.elems.resize(static_cast<std::size_t>(n));
    std::iota(p.elems.begin(), p.elems.end(), 0);
    std::stable_sort(p.elems.begin(), p.elems.end(), [&](Vertex a, Vertex b) {
      return g_.degree(a) < g_.degree(b);
    });
    p.pos.resize(static_cast<std::size_t>(n));
    p.cell.resize(static_cast<std::size_t>(n));
    p.cell_end.assign(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::int32_t> splitters;
    for (std::int32_t i = 0; i < n;) {
      std::int32_t j = i;
      while (j < n && g_.degree(p.elems[j]) == g_.degree(p.elems[i])) ++j;
      for (std::int32_t k = i; k < j; ++k) {
        p.pos[p.elems[k]] = k;
        p.cell[p.elems[k]] = i;
      }
      p.cell_end[i] = j;
      splitters.push_back(i);
      ++p.num_cells;
      i = j;
    }
    Charge();
    refiner_.Refine(p, splitters, nullptr, nullptr);
    path_.push_back(p);
    while (!p.Discrete()) {
      const std::int32_t c = p.FirstNonSingleton();
      const Vertex v = p.CellMembersSorted(c).front();
      target_.push_back(c);
      fixed_.push_back(v);
      Charge();
      Trace trace;
      const std::int32_t s = Individualize(p, v);
      refiner_.Refine(p, {s}, nullptr, &trace);
      traces_.push_back(std::move(trace));
      path_.push_back(p);
    }
  }

  std::optional<Permutation> Descend(std::size_t level, Partition& p,
                                     Vertex w) {
    Charge();
    const std::int32_t s = Individualize(p, w);
    if (!refiner_.Refine(p, {s}, &traces_[level - 1], nullptr)) {
      return std::nullopt;
    }
    if (level == fixed_.size()) return Leaf(p);
    const std::int32_t c = target_[level];
    for (Vertex u : p.CellMembersSorted(c)) {
      Partition child = p;
      if (auto found = Descend(level + 1, child, u)) return found;
    }
    return std::nullopt;
  }

  std::optional<Permutation> Leaf(const Partition& p) const {
    const Partition& first = path_.back();
    std::vector<Vertex> image(first.elems.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
      image[first.elems[i]] = p.elems[i];
    }
    Permutation gamma = Permutation::FromImage(std::move(image));
    if (IsAutomorphism(g_, gamma)) return gamma;
    return std::nullopt;
  }

  const Graph& g_;
  Refiner refiner_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<Partition> path_;       // path_[i]: after i individualizations
  std::vector<std::int32_t> target_;  // target_[i]: cell split at level i+1
  std::vector<Vertex> fixed_;         // fixed_[i]: vertex of level i+1
  std::vector<Trace> traces_;         // traces_[i]: refinement of level i+1
};

}  // namespace

AutReport FindNontrivialAutomorphism(const Graph& g,
                                     const SearchOptions& options) {
  AutReport report;
  std::int64_t nodes = 0;
  try {
    Search search(g, options.node_budget);
    for (std::size_t level = search.depth(); level >= 1; --level) {
      const Vertex v = search.FixedAt(level);
      for (Vertex w : search.TargetCell(level)) {
        if (w == v) continue;
        if (auto gamma = search.MapLevel(level, w)) {
          report.verdict = Verdict::kNontrivial;
          report.witness = std::move(gamma);
          report.nodes = search.nodes();
          return report;
        }
      }
      nodes = search.nodes();
    }
    report.verdict = Verdict::kTrivial;
    report.nodes = search.nodes();
  } catch (const BudgetExhausted&) {
    report.verdict = Verdict::kUnknown;
    report.nodes = std::max(nodes, options.node_budget);
  }
  return report;
}

BigInt GroupOrder(const Graph& g, const SearchOptions& options,
                  Vertex max_vertices) {
  if (g.num_vertices() > max_vertices) {
    throw Error(Errc::kInvalidArgument,
                "group order supported up to " + std::to_string(max_vertices) +
                    " vertices");
  }
  try {
    Search search(g, options.node_budget);
    UnionFind orbits(static_cast<std::size_t>(g.num_vertices()));
    BigInt order = 1;
    for (std::size_t level = search.depth(); level >= 1; --level) {
      const Vertex v = search.FixedAt(level);
      for (Vertex w : search.TargetCell(level)) {
        if (orbits.Find(w) == orbits.Find(v) || orbits.Failed(w)) continue;
        if (auto gamma = search.MapLevel(level, w)) {
          for (Vertex x = 0; x < gamma->size(); ++x) orbits.Union(x, (*gamma)(x));
        } else {
          orbits.MarkFailed(w);
        }
      }
      order *= static_cast<unsigned long long>(orbits.Size(v));
    }
    return order;
  } catch (const BudgetExhausted&) {
    throw Error(Errc::kSearchBudgetExceeded,
                "group order search exceeded " +
                    std::to_string(options.node_budget) + " nodes");
  }
}

}  // namespace degsym
