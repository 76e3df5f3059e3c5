#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degsym {

enum class Errc {
  kZeroDegree,
  kOddSum,
  kNotGraphical,
  kBadConstants,
  kSelfLoop,
  kDuplicateEdge,
  kLabelOutOfRange,
  kRejectionBudgetExceeded,
  kSearchBudgetExceeded,
  kNotAnAutomorphism,
  kNotATree,
  kDegenerate,
  kDegenerateZero,
  kEdgeInC,
  kBudgetExceeded,
  kDegreeMismatch,
  kParse,
  kConfig,
  kInvalidArgument,
};

std::string_view ErrcName(Errc code);

// Every failure in the library is reported as an Error carrying a machine
// readable code; the message names the violated condition.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(ErrcName(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace degsym
