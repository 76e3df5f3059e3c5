#include "degsym/moments.hpp"

#include <algorithm>
#include <cmath>

#include "degsym/error.hpp"

namespace degsym::moments {
namespace {

double Choose2(std::int64_t k) {
  return static_cast<double>(k) * static_cast<double>(k - 1) / 2.0;
}

double Pz(double ex, double ex2fac) {
  if (!(ex > 0)) return 0;
  return PaleyZygmund(ex, ex2fac + ex);
}

}  // namespace

FirstMoment ExpectedCherries(const DegreeSequence& d) {
  const DegreeStats& s = d.stats();
  FirstMoment out;
  if (s.n1 < 2 || s.M(2) == 0) return out;
  const double m1 = s.Md(1);
  const double n1 = static_cast<double>(s.n1);
  out.asymptotic = n1 * n1 * s.Md(2) / (2 * m1 * m1);
  // Degree-1 vertices contribute nothing to M2, so the sum over w outside
  // V1 is M2 itself.
  out.exact_sum = Choose2(s.n1) * s.Md(2) / (m1 * m1);
  return out;
}

FirstMoment ExpectedPendantTriangles(const DegreeSequence& d) {
  const DegreeStats& s = d.stats();
  FirstMoment out;
  if (s.n2 < 2) return out;
  const double m1 = s.Md(1);
  const double n2 = static_cast<double>(s.n2);
  out.asymptotic = 2 * n2 * n2 * s.Md(2) / std::pow(m1, 3);
  out.exact_sum = Choose2(s.n2) * 4 * s.Md(2) / std::pow(m1, 3);
  return out;
}

SecondMoment SecondMoments(const DegreeSequence& d) {
  const DegreeStats& s = d.stats();
  const double m1 = s.Md(1);
  const double m2 = s.Md(2);
  const double n1 = static_cast<double>(s.n1);
  const double n2 = static_cast<double>(s.n2);
  SecondMoment out;
  out.y = std::pow(n1, 4) * m2 * m2 / (4 * std::pow(m1, 4));
  out.z = 4 * std::pow(n2, 4) * m2 * m2 / std::pow(m1, 6);
  return out;
}

double PaleyZygmund(double ex, double ex2) {
  if (ex == 0) throw Error(Errc::kDegenerateZero, "E X = 0");
  if (!(ex > 0) || ex2 < ex * ex * (1 - 1e-12)) {
    throw Error(Errc::kInvalidArgument, "need E X > 0 and E X^2 >= (E X)^2");
  }
  return std::min(1.0, ex * ex / ex2);
}

double ConditionalEdgeProb(const DegreeSequence& d, Vertex u, Vertex v,
                           std::span<const Edge> c, std::size_t cap) {
  const auto n = static_cast<Vertex>(d.size());
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
    throw Error(Errc::kInvalidArgument, "u, v must be distinct labels in [0,n)");
  }
  if (c.size() > cap) {
    throw Error(Errc::kInvalidArgument,
                "|C| = " + std::to_string(c.size()) + " exceeds cap " +
                    std::to_string(cap));
  }
  const Edge uv = Edge::Of(u, v);
  std::int64_t cu = 0;
  std::int64_t cv = 0;
  for (const Edge& e : c) {
    if (Edge::Of(e.u, e.v) == uv) {
      throw Error(Errc::kEdgeInC, "edge {" + std::to_string(uv.u) + "," +
                                      std::to_string(uv.v) + "} is in C");
    }
    cu += e.u == u || e.v == u;
    cv += e.u == v || e.v == v;
  }
  if (cu > d[u] || cv > d[v]) {
    throw Error(Errc::kInvalidArgument, "C exceeds a vertex degree");
  }
  const double ru = static_cast<double>(d[u] - cu);
  const double rv = static_cast<double>(d[v] - cv);
  return ru * rv / (d.stats().Md(1) + ru);
}

double SubgraphProbBound(const DegreeSequence& d, int q, double c) {
  if (q < 0 || !(c > 0)) {
    throw Error(Errc::kInvalidArgument, "need q >= 0 and C > 0");
  }
  const double delta = static_cast<double>(d.stats().max_degree);
  return std::pow(c * delta * delta / d.stats().Md(1), q);
}

MomentEstimates Estimate(const DegreeSequence& d) {
  const DegreeStats& s = d.stats();
  const FirstMoment y = ExpectedCherries(d);
  const FirstMoment z = ExpectedPendantTriangles(d);
  const SecondMoment second = SecondMoments(d);
  MomentEstimates out;
  out.ey = y.asymptotic;
  out.ey_exact_sum = y.exact_sum;
  out.ez = z.asymptotic;
  out.ez_exact_sum = z.exact_sum;
  out.ey2fac = second.y;
  out.ez2fac = second.z;
  out.pz_y = Pz(out.ey, out.ey2fac);
  out.pz_z = Pz(out.ez, out.ez2fac);
  out.pz_lower = std::max(out.pz_y, out.pz_z);
  const double m1 = s.Md(1);
  const double n1 = static_cast<double>(s.n1);
  out.err_m3 = std::pow(n1, 3) * s.Md(3) / std::pow(m1, 3);
  out.err_m4 = std::pow(n1, 4) * s.Md(4) / std::pow(m1, 4);
  return out;
}

}  // namespace degsym::moments
