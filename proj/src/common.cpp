#include "entroscope/error.hpp"
#include "entroscope/subset.hpp"

namespace entroscope {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NonPositiveProbability: return "NonPositiveProbability";
    case ErrorCode::OutOfAlphabet: return "OutOfAlphabet";
    case ErrorCode::DuplicateOutcome: return "DuplicateOutcome";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NameCollision: return "NameCollision";
    case ErrorCode::PartialFunction: return "PartialFunction";
    case ErrorCode::OverlappingSubsets: return "OverlappingSubsets";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnsupportedArity: return "UnsupportedArity";
    case ErrorCode::IrrationalCoefficients: return "IrrationalCoefficients";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ConstraintsNotPinned: return "ConstraintsNotPinned";
    case ErrorCode::GapNotPositive: return "GapNotPositive";
    case ErrorCode::InconsistentBox: return "InconsistentBox";
    case ErrorCode::UnknownInequality: return "UnknownInequality";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FormatError: return "FormatError";
  }
  return "Unknown";
}

std::string subset_names(SubsetMask s, const std::vector<std::string>& names,
                         const std::string& sep) {
  std::string out;
  for (int i : subset_members(s)) {
    if (!out.empty()) out += sep;
    out += names.at(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace entroscope
