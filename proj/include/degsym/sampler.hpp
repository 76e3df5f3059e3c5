#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "degsym/degree_sequence.hpp"
#include "degsym/graph.hpp"
#include "degsym/rng.hpp"

namespace degsym {

enum class SampleKind { kRejectionPairing, kSwitchChain, kAuto };

std::string SampleKindName(SampleKind kind);
SampleKind ParseSampleKind(const std::string& name);  // auto|rejection|switch

struct SampleMethod {
  SampleKind kind = SampleKind::kAuto;
  // Switch-chain steps; 0 selects the default 20 * M_1.
  std::int64_t steps = 0;
  // Maximum pairing rounds before rejection gives up.
  std::int64_t rejection_budget = 1'000'000;

  static SampleMethod Rejection(std::int64_t budget = 1'000'000) {
    return {SampleKind::kRejectionPairing, 0, budget};
  }
  static SampleMethod Switch(std::int64_t steps = 0) {
    return {SampleKind::kSwitchChain, steps, 1'000'000};
  }
  static SampleMethod Auto() { return {}; }
};

struct SampleResult {
  Graph graph;
  SampleKind used = SampleKind::kRejectionPairing;
  // True when the switch chain produced the sample (uniform only in the
  // limit of many steps).
  bool approximate = false;
  std::int64_t rounds = 0;  // pairing rounds or switch steps performed
};

// Draws a simple graph with degree array exactly d. Rejection pairing is
// exactly uniform; the switch chain is approximately uniform.
// Throws Error{kRejectionBudgetExceeded} for an exhausted explicit rejection.
SampleResult SampleDetailed(const DegreeSequence& d, const SampleMethod& method,
                            std::uint64_t seed);
Graph Sample(const DegreeSequence& d, const SampleMethod& method,
             std::uint64_t seed);

// exp(-lambda - lambda^2) with lambda = M_2 / (2 M_1): the limiting
// probability that a uniform pairing is simple.
double PairingAcceptanceEstimate(const DegreeSequence& d);

// One uniform perfect matching of the M_1 half-edge points. `pairs` may
// contain loops (u == v) and repeated pairs.
struct PairingOutcome {
  std::vector<Edge> pairs;
  bool simple = false;
};
PairingOutcome PairingRound(const DegreeSequence& d, CounterRng& rng);
// Same on any non-negative sequence with even sum, graphical or not.
PairingOutcome PairingRound(std::span<const Degree> degrees, CounterRng& rng);

// Deterministic realization of a graphical sequence.
Graph HavelHakimi(const DegreeSequence& d);

// Mutable state of the double-edge-switch chain.
class SwitchChain {
 public:
  explicit SwitchChain(const Graph& g);

  // One lazy step: choose two edges uniformly and an orientation of the
  // second; {a,b},{c,d} -> {a,c},{b,d} when the result stays simple.
  // Returns whether the switch was applied.
  bool Step(CounterRng& rng);
  void Run(std::int64_t steps, CounterRng& rng);

  // Applies the switch on edge indices (i, j) with the given orientation if
  // valid; exposed for the reversibility tests.
  bool TrySwitch(std::size_t i, std::size_t j, bool flip);

  Graph ToGraph() const;
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  bool Adjacent(Vertex u, Vertex v) const;
  void Replace(Vertex v, Vertex from, Vertex to);

  Vertex n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Single switch step on an immutable graph.
Graph SwitchStep(const Graph& g, CounterRng& rng);

}  // namespace degsym
