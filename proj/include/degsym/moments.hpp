#pragma once

#include <cstdint>
#include <span>

#include "degsym/degree_sequence.hpp"
#include "degsym/graph.hpp"

// Closed-form moment predictions. "asymptotic" values are the leading-order
// forms; "exact_sum" values keep the finite sums before simplification.
namespace degsym::moments {

struct FirstMoment {
  double asymptotic = 0;
  double exact_sum = 0;
};

// Cherries: n1^2 M2 / (2 M1^2) and C(n1,2) sum_{w not in V1} d_w(d_w-1)/M1^2.
FirstMoment ExpectedCherries(const DegreeSequence& d);

// Pendant triangles: 2 n2^2 M2 / M1^3 and C(n2,2) sum_z 4 d_z(d_z-1)/M1^3.
FirstMoment ExpectedPendantTriangles(const DegreeSequence& d);

// Leading terms of E[Y(Y-1)] and E[Z(Z-1)].
struct SecondMoment {
  double y = 0;  // n1^4 M2^2 / (4 M1^4)
  double z = 0;  // 4 n2^4 M2^2 / M1^6
};
SecondMoment SecondMoments(const DegreeSequence& d);

// (E X)^2 / E[X^2]. Throws Error{kDegenerateZero} if ex == 0 and
// Error{kInvalidArgument} if ex2 < ex^2.
double PaleyZygmund(double ex, double ex2);

inline constexpr std::size_t kConditionCap = 8;

// (d_u - |C_u|)(d_v - |C_v|) / (M1 + d_u - |C_u|). Throws Error{kEdgeInC}
// if uv is in C, Error{kInvalidArgument} if |C| exceeds cap or C uses more
// edges at a vertex than its degree.
double ConditionalEdgeProb(const DegreeSequence& d, Vertex u, Vertex v,
                           std::span<const Edge> c,
                           std::size_t cap = kConditionCap);

inline constexpr double kDefaultBoundConstant = 2.0;

// (C Delta^2 / M1)^q.
double SubgraphProbBound(const DegreeSequence& d, int q,
                         double c = kDefaultBoundConstant);

struct MomentEstimates {
  double ey = 0;
  double ey_exact_sum = 0;
  double ez = 0;
  double ez_exact_sum = 0;
  double ey2fac = 0;
  double ez2fac = 0;
  // Paley-Zygmund bounds from the asymptotic forms; 0 where undefined.
  double pz_y = 0;
  double pz_z = 0;
  double pz_lower = 0;  // max(pz_y, pz_z)
  // Case-2 error magnitudes of the cherry second moment.
  double err_m3 = 0;  // n1^3 M3 / M1^3
  double err_m4 = 0;  // n1^4 M4 / M1^4
};

MomentEstimates Estimate(const DegreeSequence& d);

}  // namespace degsym::moments
