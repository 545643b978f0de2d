#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entroscope/rational.hpp"
#include "entroscope/subset.hpp"

namespace entroscope {

class EntropyProfile;

/// Sparse linear functional over subset-entropy coordinates.
///
/// Every informational quantity is stored reduced to H(S) coordinates; zero
/// coefficients are never kept. Variable names fix the coordinate system.
class InfoExpression {
 public:
  InfoExpression() = default;
  explicit InfoExpression(std::vector<std::string> variables);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::map<SubsetMask, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(SubsetMask s) const;
  /// Adds `c * H(s)`; a term that cancels to zero is dropped.
  void add_term(SubsetMask s, const Rational& c);

  InfoExpression& operator+=(const InfoExpression& o);
  InfoExpression& operator-=(const InfoExpression& o);
  InfoExpression& operator*=(const Rational& c);

  friend InfoExpression operator+(InfoExpression a, const InfoExpression& b) { return a += b; }
  friend InfoExpression operator-(InfoExpression a, const InfoExpression& b) { return a -= b; }
  friend InfoExpression operator*(const Rational& c, InfoExpression e) { return e *= c; }
  friend InfoExpression operator-(InfoExpression e) { return e *= Rational(-1); }

  friend bool operator==(const InfoExpression&, const InfoExpression&) = default;

  /// Sum of |coefficient| over all terms.
  Rational l1_norm() const;

 private:
  void require_compatible(const InfoExpression& o) const;

  std::vector<std::string> variables_;
  std::map<SubsetMask, Rational> terms_;
};

/// H(target | given) expanded to H(target ∪ given) − H(given).
InfoExpression expand_entropy(const std::vector<std::string>& variables, SubsetMask target,
                              SubsetMask given = 0);
/// I(a; b | given) = H(a∪g) + H(b∪g) − H(a∪b∪g) − H(g).
InfoExpression expand_mutual_information(const std::vector<std::string>& variables, SubsetMask a,
                                         SubsetMask b, SubsetMask given = 0);

/// Dot product with the profile's coordinates. Throws DimensionMismatch.
double evaluate(const InfoExpression& e, const EntropyProfile& p);

/// Structural reading of an expression as a single information quantity.
struct InfoPattern {
  enum class Kind { ConditionalEntropy, MutualInformation };
  Kind kind = Kind::ConditionalEntropy;
  SubsetMask first = 0;   // target for H, left argument for I
  SubsetMask second = 0;  // unused for H, right argument for I
  SubsetMask given = 0;
};

/// Recognizes positive multiples of H(S|T) and I(S;T|U) (S, T, U disjoint).
std::optional<InfoPattern> classify(const InfoExpression& e);

/// Human-readable name such as "I(a;b|c)" or "H(c|a,b)".
std::string pattern_label(const InfoPattern& p, const std::vector<std::string>& variables);

/// One elemental Shannon inequality: `expression >= 0`.
struct ElementalInequality {
  std::string label;
  InfoPattern pattern;
  InfoExpression expression;
};

/// Minimal generating set of the Shannon cone: n monotonicity terms
/// H(N) − H(N∖i) followed by every I(i;j|K), i < j, K ⊆ N∖{i,j}.
std::vector<ElementalInequality> elemental_family(const std::vector<std::string>& variables);

}  // namespace entroscope
