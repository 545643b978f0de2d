#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "entroscope/distribution.hpp"
#include "entroscope/expression.hpp"
#include "entroscope/profile.hpp"

namespace entroscope {

/// `body >= 0` whenever every constraint expression equals 0. Unconditional
/// inequalities have no constraints.
struct ConditionalInequality {
  std::string name;
  std::vector<InfoExpression> constraints;
  InfoExpression body;

  bool is_conditional() const { return !constraints.empty(); }
};

/// Default variable names of the four-variable catalog.
const std::vector<std::string>& quadruple_names();

/// The inequalities over (a,b,c,d) known by name:
///   "zy98", "cond1" .. "cond4", "matus-star(k)" for integer k >= 1,
///   "ingleton" (not an information inequality; kept for classification).
/// Throws UnknownInequality.
ConditionalInequality find_inequality(const std::string& name);

/// Matúš family at parameter k >= 1.
ConditionalInequality matus_star(int k);

struct Catalog {
  std::vector<ConditionalInequality> families;  // zy98, cond1..cond4, matus-star(1)
  std::vector<ElementalInequality> basic;       // elemental Shannon inequalities, n = 4
};

/// Immutable catalog; matus-star appears at k = 1, use matus_star(k) for others.
const Catalog& catalog();

/// Ingleton expression with roles permuted by `ordering` (role -> variable
/// index): I(c;d|a) + I(c;d|b) + I(a;b) − I(c;d), >= 0 when satisfied.
double ingleton(const EntropyProfile& p, std::array<int, 4> ordering = {0, 1, 2, 3});

enum class ConstraintStatus {
  CertifiedZero,  // exact structural test on the distribution
  NumericZero,    // |value| <= tol, no structural test was possible
  Violated,
};

struct ConstraintCheck {
  std::string text;   // canonical label, e.g. "I(a;b|c)"
  ConstraintStatus status = ConstraintStatus::Violated;
  double value = 0;
};

struct ConditionalVerdict {
  std::string name;
  bool applicable = true;   // every constraint holds
  bool numeric_warning = false;  // some constraint only holds numerically
  std::vector<ConstraintCheck> constraints;
  std::optional<double> body;  // evaluated only when applicable
  bool holds = false;          // body >= -tol
};

/// Certifies constraints exactly where they read as I(S;T|U) or H(S|T)
/// (factorization or functional dependence), otherwise numerically with `tol`.
/// Variables are matched by name; the distribution must have them all.
ConditionalVerdict check_conditional(const ConditionalInequality& ineq, const JointDistribution& d,
                                     double tol = 1e-9);

/// Profile-only variant: every constraint is numeric.
ConditionalVerdict check_conditional(const ConditionalInequality& ineq, const EntropyProfile& p,
                                     double tol = 1e-9);

/// Exact structural test of `e == 0` on `d`; nullopt when `e` is not a single
/// conditional entropy or mutual information.
std::optional<bool> certify_zero(const InfoExpression& e, const JointDistribution& d);

/// Re-expresses `e` over another variable list (matched by name).
InfoExpression rebase(const InfoExpression& e, const std::vector<std::string>& variables);

/// rebase() when every variable of `e` is present in `variables`, otherwise a
/// positional renaming (same variable count required; DimensionMismatch).
InfoExpression align_variables(const InfoExpression& e, const std::vector<std::string>& variables);

}  // namespace entroscope
