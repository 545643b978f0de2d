#pragma once

#include <string>
#include <vector>

#include "entroscope/expression.hpp"
#include "entroscope/rational.hpp"

namespace entroscope {

inline constexpr int kMaxLpVariables = 6;

/// Elemental inequalities for 1 <= n <= 6 variables; names default to a, b, c, ...
/// Throws UnsupportedArity.
std::vector<ElementalInequality> elemental_inequalities(int n);
std::vector<ElementalInequality> elemental_inequalities(const std::vector<std::string>& variables);

struct LpResult {
  enum class Outcome { Zero, UnboundedBelow };
  Outcome outcome = Outcome::Zero;
  /// Zero: y >= 0 with sum_i y_i cone_i == objective exactly.
  std::vector<Rational> dual_weights;
  /// UnboundedBelow: h with cone_i(h) >= 0 for all i and objective(h) < 0.
  /// Indexed like EntropyProfile coordinates (mask − 1).
  std::vector<Rational> ray;
  Rational ray_value;
  std::size_t pivots = 0;
};

/// Minimizes `objective` over the cone {h : every cone expression >= 0}.
/// The optimum is 0 or −∞, decided by an exact phase-one simplex on the Farkas
/// system (cone^T y = objective, y >= 0) with Bland's rule.
LpResult lp_min(const InfoExpression& objective, const std::vector<InfoExpression>& cone);

struct ShannonTypeVerdict {
  bool shannon_type = false;
  std::vector<std::string> variables;
  /// Non-zero dual weights keyed by elemental label, in elemental order.
  std::vector<std::pair<std::string, Rational>> dual_weights;
  /// Witness polymatroid (coordinates by mask − 1) when not Shannon-type.
  std::vector<Rational> witness;
  Rational witness_value;
};

/// Decides whether `e >= 0` follows from the elemental inequalities; the
/// attached certificate is re-verified exactly before returning.
ShannonTypeVerdict is_shannon_type(const InfoExpression& e);

/// Independent exact check of a verdict against its expression.
bool verify_certificate(const ShannonTypeVerdict& v, const InfoExpression& e);

}  // namespace entroscope
