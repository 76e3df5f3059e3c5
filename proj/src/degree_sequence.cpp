#include "degsym/degree_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "degsym/error.hpp"

namespace degsym {

std::string WideToString(Wide value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  unsigned __int128 mag =
      negative ? -static_cast<unsigned __int128>(value)
               : static_cast<unsigned __int128>(value);
  std::string out;
  while (mag > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

double WideToDouble(Wide value) { return static_cast<double>(value); }

Wide FallingFactorial(std::int64_t x, int i) {
  Wide result = 1;
  for (int j = 0; j < i; ++j) result *= static_cast<Wide>(x - j);
  return result;
}

bool IsGraphical(std::span<const Degree> degrees) {
  std::vector<std::int64_t> d(degrees.begin(), degrees.end());
  std::int64_t total = 0;
  for (auto x : d) {
    if (x < 0) return false;
    total += x;
  }
  if (total % 2 != 0) return false;
  const auto n = static_cast<std::int64_t>(d.size());
  std::sort(d.begin(), d.end(), std::greater<>());
  if (n == 0 || d[0] == 0) return true;
  if (d[0] >= n) return false;

  // suffix[i] = sum of d[i..n)
  std::vector<std::int64_t> suffix(d.size() + 1, 0);
  for (std::int64_t i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + d[i];

  // For k = 1..n: sum_{i<k} d_i <= k(k-1) + sum_{i>=k} min(d_i, k), with
  // 0-based indices. Entries >= k among positions >= k form a prefix of that
  // range whose right end (last) is non-increasing in k.
  std::int64_t prefix = 0;
  std::int64_t last = n;  // one past the last index with d >= k
  for (std::int64_t k = 1; k <= n; ++k) {
    prefix += d[k - 1];
    while (last > 0 && d[last - 1] < k) --last;
    const std::int64_t hi = std::max(last, k);
    const std::int64_t rhs = k * (k - 1) + (hi - k) * k + suffix[hi];
    if (prefix > rhs) return false;
  }
  return true;
}

DegreeStats Statistics(std::span<const Degree> degrees) {
  DegreeStats s;
  s.n = static_cast<std::int64_t>(degrees.size());
  for (Degree x : degrees) {
    if (x == 1) ++s.n1;
    if (x == 2) ++s.n2;
    if (x >= 3) ++s.n_ge3;
    s.max_degree = std::max(s.max_degree, x);
    for (int i = 1; i <= 4; ++i) s.moments[i - 1] += FallingFactorial(x, i);
  }
  const auto m1 = static_cast<std::int64_t>(s.moments[0]);
  if (s.n > 0) {
    const std::int64_t g = std::gcd(m1, s.n);
    s.avg_num = m1 / g;
    s.avg_den = s.n / g;
  }
  return s;
}

DegreeSequence::DegreeSequence(std::vector<Degree> degrees)
    : degrees_(std::move(degrees)), stats_(Statistics(degrees_)) {}

DegreeSequence DegreeSequence::Validate(std::vector<Degree> degrees) {
  if (degrees.empty()) {
    throw Error(Errc::kInvalidArgument, "degree sequence is empty");
  }
  std::int64_t total = 0;
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    if (degrees[v] < 1) {
      throw Error(Errc::kZeroDegree, "vertex " + std::to_string(v) +
                                         " has degree " +
                                         std::to_string(degrees[v]) +
                                         "; every degree must be >= 1");
    }
    total += degrees[v];
  }
  if (total % 2 != 0) {
    throw Error(Errc::kOddSum,
                "degree sum " + std::to_string(total) + " is odd");
  }
  if (!IsGraphical(degrees)) {
    throw Error(Errc::kNotGraphical,
                "sequence violates the Erdos-Gallai inequalities");
  }
  return DegreeSequence(std::move(degrees));
}

ThresholdDiagnostics Diagnostics(const DegreeSequence& d, double r1, double r2,
                                 double eps) {
  if (!(r1 > 0) || !(r2 > 0)) {
    throw Error(Errc::kBadConstants, "R1 and R2 must be positive");
  }
  if (!(eps > 0 && eps < 1)) {
    throw Error(Errc::kBadConstants, "epsilon must lie in (0, 1)");
  }
  ThresholdDiagnostics t;
  t.r1 = r1;
  t.r2 = r2;
  t.eps = eps;
  t.c0 = 1.0 / 6.0 - 1.0 / (2.0 * r1) - 1.0 / r2;
  if (!(t.c0 > 0)) {
    throw Error(Errc::kBadConstants,
                "exponent 1/6 - 1/(2 R1) - 1/R2 = " + std::to_string(t.c0) +
                    " must be positive");
  }
  t.alpha2 = 1.0 / (r2 + 4.0);
  t.alpha1 = (1.0 - t.alpha2) / (r1 + 4.0);

  const DegreeStats& s = d.stats();
  const auto n = static_cast<double>(s.n);
  const auto n1 = static_cast<double>(s.n1);
  const auto n2 = static_cast<double>(s.n2);
  const double m1 = s.Md(1);
  const double m2 = s.Md(2);
  const double delta = s.max_degree;

  t.r_bounded_1 = n1 / std::sqrt(n);
  t.r_bounded_2 = n2 / n;
  t.degenerate_m2 = s.M(2) == 0;
  if (!t.degenerate_m2) {
    t.r_super_1 = n1 * std::sqrt(m2) / m1;
    t.r_super_2 = n2 * std::sqrt(m2 / (m1 * m1 * m1));
  }

  const double growth = delta * delta / (m1 / n);  // Delta^2 / d
  t.sub_growth = growth / std::pow(n, t.c0);
  if (s.n1 > 0) t.sub_deg1_paths = growth / (std::pow(n, 0.25) / std::sqrt(n1));
  if (s.n2 > 0) t.sub_deg2_paths = growth / std::pow(n / n2, t.alpha2 / 2.0);
  const std::array<double, 2> counts{n1, n2};
  const std::array<double, 2> alphas{t.alpha1, t.alpha2};
  for (std::size_t i = 0; i < 2; ++i) {
    if (counts[i] > 0) {
      t.sub_density[i] = std::pow(counts[i] / n, alphas[i] * (1.0 - eps)) *
                         std::pow(growth, 2.0 - eps);
    }
  }
  return t;
}

namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Degree ParseDegreeToken(const std::string& token, int line_no) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty() || value < 0 ||
      value > std::numeric_limits<Degree>::max()) {
    throw Error(Errc::kParse, "line " + std::to_string(line_no) +
                                  ": expected a non-negative integer, got '" +
                                  token + "'");
  }
  return static_cast<Degree>(value);
}

}  // namespace

std::vector<Degree> ParseDegreeText(const std::string& text) {
  std::vector<Degree> out;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = Trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto x = line.find_first_of("xX");
    if (x == std::string::npos) {
      out.push_back(ParseDegreeToken(line, line_no));
      continue;
    }
    const Degree count = ParseDegreeToken(Trim(line.substr(0, x)), line_no);
    const Degree degree = ParseDegreeToken(Trim(line.substr(x + 1)), line_no);
    out.insert(out.end(), static_cast<std::size_t>(count), degree);
  }
  return out;
}

std::vector<Degree> ReadDegreeFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParse, "cannot open degree file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseDegreeText(buffer.str());
}

std::string FormatDegreeText(std::span<const Degree> degrees,
                             DegreeFormat format) {
  std::ostringstream out;
  if (format == DegreeFormat::kPerLine) {
    for (Degree x : degrees) out << x << '\n';
    return out.str();
  }
  for (std::size_t i = 0; i < degrees.size();) {
    std::size_t j = i;
    while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
    out << (j - i) << " x " << degrees[i] << '\n';
    i = j;
  }
  return out.str();
}

void WriteDegreeFile(const std::string& path, std::span<const Degree> degrees,
                     DegreeFormat format) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::kParse, "cannot write '" + path + "'");
  out << FormatDegreeText(degrees, format);
}

}  // namespace degsym
