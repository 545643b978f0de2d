#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "entroscope/error.hpp"
#include "entroscope/expression.hpp"

namespace entroscope {

/// Parse failure with the byte offset where it happened and what would have
/// been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Parses the expression language
///
///   expr  := "0" | [sign] term (("+" | "-") term)*
///   term  := [coef "*"] atom
///   atom  := "H(" vars ["|" vars] ")" | "I(" vars ";" vars ["|" vars] ")"
///   vars  := name ("," name)*
///   coef  := integer | integer "/" integer | decimal
///
/// over the given variable order. Coefficients stay exact rationals.
/// Errors: SyntaxError, UnknownVariable, OverlappingSubsets.
InfoExpression parse_expression(std::string_view text, const std::vector<std::string>& variables);

/// Variable names mentioned in `text`, sorted; useful when no order is given.
std::vector<std::string> collect_variables(std::string_view text);

/// Parses with the order given by collect_variables().
InfoExpression parse_expression(std::string_view text);

/// Deterministic text form: terms by ascending subset mask, exact coefficients.
/// parse_expression(print_canonical(e), e.variables()) == e.
std::string print_canonical(const InfoExpression& e);

}  // namespace entroscope
