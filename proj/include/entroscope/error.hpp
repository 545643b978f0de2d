#pragma once

#include <stdexcept>
#include <string>

namespace entroscope {

enum class ErrorCode {
  SumNotOne,
  ArityMismatch,
  NonPositiveProbability,
  OutOfAlphabet,
  DuplicateOutcome,
  EmptySubset,
  UnknownVariable,
  BudgetExceeded,
  NameCollision,
  PartialFunction,
  OverlappingSubsets,
  DimensionMismatch,
  SyntaxError,
  UnsupportedArity,
  IrrationalCoefficients,
  NotPrime,
  ConstraintsNotPinned,
  GapNotPositive,
  InconsistentBox,
  UnknownInequality,
  InvalidArgument,
  FormatError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace entroscope
