#include "degsym/error.hpp"

namespace degsym {

std::string_view ErrcName(Errc code) {
  switch (code) {
    case Errc::kZeroDegree: return "ZeroDegree";
    case Errc::kOddSum: return "OddSum";
    case Errc::kNotGraphical: return "NotGraphical";
    case Errc::kBadConstants: return "BadConstants";
    case Errc::kSelfLoop: return "SelfLoop";
    case Errc::kDuplicateEdge: return "DuplicateEdge";
    case Errc::kLabelOutOfRange: return "LabelOutOfRange";
    case Errc::kRejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case Errc::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::kNotAnAutomorphism: return "NotAnAutomorphism";
    case Errc::kNotATree: return "NotATree";
    case Errc::kDegenerate: return "Degenerate";
    case Errc::kDegenerateZero: return "DegenerateZero";
    case Errc::kEdgeInC: return "EdgeInC";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kDegreeMismatch: return "DegreeMismatch";
    case Errc::kParse: return "ParseError";
    case Errc::kConfig: return "ConfigError";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace degsym
