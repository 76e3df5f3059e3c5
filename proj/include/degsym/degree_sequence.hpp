#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace degsym {

using Degree = std::int32_t;
// Falling-factorial moments overflow 64 bits at n ~ 1e6, max degree ~ 1e3.
using Wide = __int128;

std::string WideToString(Wide value);
double WideToDouble(Wide value);

// Exact statistics of a degree sequence.
struct DegreeStats {
  std::int64_t n = 0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t n_ge3 = 0;
  // moments[i - 1] = M_i = sum_j (d_j)_i for i = 1..4.
  std::array<Wide, 4> moments{};
  Degree max_degree = 0;
  // Average degree M_1 / n as a reduced fraction.
  std::int64_t avg_num = 0;
  std::int64_t avg_den = 1;

  Wide M(int i) const { return moments.at(static_cast<std::size_t>(i - 1)); }
  double Md(int i) const { return WideToDouble(M(i)); }
  double average_degree() const {
    return static_cast<double>(avg_num) / static_cast<double>(avg_den);
  }
};

// (x)_i = x (x-1) ... (x-i+1).
Wide FallingFactorial(std::int64_t x, int i);

// Erdos-Gallai test on an arbitrary sequence of non-negative integers.
// The sum parity is part of the test.
bool IsGraphical(std::span<const Degree> degrees);

// A validated, graphical degree sequence with no zero entries. Immutable.
class DegreeSequence {
 public:
  // Throws Error{kZeroDegree | kOddSum | kNotGraphical | kInvalidArgument}.
  static DegreeSequence Validate(std::vector<Degree> degrees);

  std::span<const Degree> degrees() const { return degrees_; }
  Degree operator[](std::size_t v) const { return degrees_[v]; }
  std::size_t size() const { return degrees_.size(); }
  const DegreeStats& stats() const { return stats_; }

  bool operator==(const DegreeSequence& other) const {
    return degrees_ == other.degrees_;
  }

 private:
  explicit DegreeSequence(std::vector<Degree> degrees);

  std::vector<Degree> degrees_;
  DegreeStats stats_;
};

DegreeStats Statistics(std::span<const Degree> degrees);
inline const DegreeStats& Statistics(const DegreeSequence& d) {
  return d.stats();
}

// Finite-n renderings of the asymptotic threshold conditions. Each field is
// a dimensionless ratio; values far below 1 indicate the asymptotic regime of
// the corresponding condition. Ratios whose left side vanishes (n_i = 0) are
// reported as 0.
struct ThresholdDiagnostics {
  double r1 = 0;  // R_1
  double r2 = 0;  // R_2
  double eps = 0;
  double c0 = 0;  // 1/6 - 1/(2 R_1) - 1/R_2
  double alpha1 = 0;
  double alpha2 = 0;

  double r_bounded_1 = 0;  // n_1 / n^{1/2}
  double r_bounded_2 = 0;  // n_2 / n
  double r_super_1 = 0;    // n_1 sqrt(M_2) / M_1
  double r_super_2 = 0;    // n_2 sqrt(M_2 / M_1^3)

  // Asymmetry-side conditions, each as LHS / RHS.
  double sub_growth = 0;      // (Delta^2/d) / n^{c0}
  double sub_deg1_paths = 0;  // (Delta^2/d) / (n^{1/4} / n_1^{1/2})
  double sub_deg2_paths = 0;  // (Delta^2/d) / ((n/n_2)^{alpha_2/2})
  // (n_i/n)^{alpha_i (1-eps)} (Delta^2/d)^{2-eps}, i = 1, 2
  std::array<double, 2> sub_density{};

  bool degenerate_m2 = false;  // M_2 = 0: super ratios forced to 0
};

// Throws Error{kBadConstants} unless R1, R2 > 0, 0 < eps < 1 and c0 > 0.
ThresholdDiagnostics Diagnostics(const DegreeSequence& d, double r1, double r2,
                                 double eps);

// Text format: one degree per line, or "COUNT x DEGREE" run lines. Both may
// be mixed; blank lines and '#' comments are skipped.
std::vector<Degree> ParseDegreeText(const std::string& text);
std::vector<Degree> ReadDegreeFile(const std::string& path);

enum class DegreeFormat { kPerLine, kRunLength };
std::string FormatDegreeText(std::span<const Degree> degrees,
                             DegreeFormat format = DegreeFormat::kRunLength);
void WriteDegreeFile(const std::string& path, std::span<const Degree> degrees,
                     DegreeFormat format = DegreeFormat::kRunLength);

}  // namespace degsym
