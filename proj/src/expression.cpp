#include "entroscope/expression.hpp"

#include <algorithm>

#include "entroscope/error.hpp"
#include "entroscope/profile.hpp"

namespace entroscope {

InfoExpression::InfoExpression(std::vector<std::string> variables)
    : variables_(std::move(variables)) {
  if (static_cast<int>(variables_.size()) > kMaxVariables)
    fail(ErrorCode::UnsupportedArity, "too many variables");
}

Rational InfoExpression::coefficient(SubsetMask s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void InfoExpression::add_term(SubsetMask s, const Rational& c) {
  if (s == 0 || c.is_zero()) return;
  if (!is_subset(s, full_mask(num_variables())))
    fail(ErrorCode::UnknownVariable, "term refers to variables outside the expression");
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void InfoExpression::require_compatible(const InfoExpression& o) const {
  if (variables_ != o.variables_)
    fail(ErrorCode::DimensionMismatch, "expressions are over different variables");
}

InfoExpression& InfoExpression::operator+=(const InfoExpression& o) {
  require_compatible(o);
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

InfoExpression& InfoExpression::operator-=(const InfoExpression& o) {
  require_compatible(o);
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

InfoExpression& InfoExpression::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

Rational InfoExpression::l1_norm() const {
  Rational sum(0);
  for (const auto& [s, c] : terms_) sum += c.sign() < 0 ? -c : c;
  return sum;
}

InfoExpression expand_entropy(const std::vector<std::string>& variables, SubsetMask target,
                              SubsetMask given) {
  if (target == 0) fail(ErrorCode::EmptySubset, "H() needs at least one variable");
  if (target & given) fail(ErrorCode::OverlappingSubsets, "H(S|T) needs disjoint S and T");
  InfoExpression e(variables);
  e.add_term(target | given, Rational(1));
  e.add_term(given, Rational(-1));
  return e;
}

InfoExpression expand_mutual_information(const std::vector<std::string>& variables, SubsetMask a,
                                         SubsetMask b, SubsetMask given) {
  if (a == 0 || b == 0) fail(ErrorCode::EmptySubset, "I(S;T) needs non-empty S and T");
  if ((a & b) || (a & given) || (b & given))
    fail(ErrorCode::OverlappingSubsets, "I(S;T|U) needs pairwise disjoint S, T, U");
  InfoExpression e(variables);
  e.add_term(a | given, Rational(1));
  e.add_term(b | given, Rational(1));
  e.add_term(a | b | given, Rational(-1));
  e.add_term(given, Rational(-1));
  return e;
}

double evaluate(const InfoExpression& e, const EntropyProfile& p) {
  if (e.num_variables() != p.num_variables())
    fail(ErrorCode::DimensionMismatch, "expression has " + std::to_string(e.num_variables()) +
                                           " variables, profile has " + std::to_string(p.num_variables()));
  double sum = 0;
  for (const auto& [s, c] : e.terms()) sum += c.to_double() * p[s];
  return sum;
}

std::optional<InfoPattern> classify(const InfoExpression& e) {
  const auto& t = e.terms();
  if (t.empty()) return std::nullopt;
  const Rational scale = t.begin()->second.sign() > 0 ? t.begin()->second : -t.begin()->second;
  std::vector<SubsetMask> pos;
  std::vector<SubsetMask> neg;
  for (const auto& [s, c] : t) {
    if (c == scale) pos.push_back(s);
    else if (c == -scale) neg.push_back(s);
    else return std::nullopt;
  }
  InfoPattern p;
  if (pos.size() == 1 && neg.empty()) {
    p.kind = InfoPattern::Kind::ConditionalEntropy;
    p.first = pos[0];
    return p;
  }
  if (pos.size() == 1 && neg.size() == 1 && is_subset(neg[0], pos[0])) {
    p.kind = InfoPattern::Kind::ConditionalEntropy;
    p.first = pos[0] & ~neg[0];
    p.given = neg[0];
    return p;
  }
  if (pos.size() == 2 && (neg.size() == 1 || neg.size() == 2)) {
    const SubsetMask x = pos[0];
    const SubsetMask y = pos[1];
    const SubsetMask w = x & y;
    std::vector<SubsetMask> expected{x | y};
    if (w != 0) expected.push_back(w);
    std::sort(expected.begin(), expected.end());
    if (neg != expected || (x & ~w) == 0 || (y & ~w) == 0) return std::nullopt;
    p.kind = InfoPattern::Kind::MutualInformation;
    p.first = x & ~w;
    p.second = y & ~w;
    p.given = w;
    return p;
  }
  return std::nullopt;
}

std::string pattern_label(const InfoPattern& p, const std::vector<std::string>& variables) {
  std::string out;
  if (p.kind == InfoPattern::Kind::ConditionalEntropy) {
    out = "H(" + subset_names(p.first, variables);
  } else {
    out = "I(" + subset_names(p.first, variables) + ";" + subset_names(p.second, variables);
  }
  if (p.given != 0) out += "|" + subset_names(p.given, variables);
  return out + ")";
}

std::vector<ElementalInequality> elemental_family(const std::vector<std::string>& variables) {
  const int n = static_cast<int>(variables.size());
  if (n < 1) fail(ErrorCode::UnsupportedArity, "need at least one variable");
  const SubsetMask all = full_mask(n);
  std::vector<ElementalInequality> out;
  for (int i = 0; i < n; ++i) {
    InfoPattern p{InfoPattern::Kind::ConditionalEntropy, SubsetMask{1} << i, 0, all & ~(SubsetMask{1} << i)};
    out.push_back({pattern_label(p, variables), p, expand_entropy(variables, p.first, p.given)});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const SubsetMask rest = all & ~(SubsetMask{1} << i) & ~(SubsetMask{1} << j);
      // Enumerate K ⊆ rest in ascending mask order.
      for (SubsetMask k = 0;; k = (k - rest) & rest) {
        InfoPattern p{InfoPattern::Kind::MutualInformation, SubsetMask{1} << i, SubsetMask{1} << j, k};
        out.push_back({pattern_label(p, variables), p,
                       expand_mutual_information(variables, p.first, p.second, k)});
        if (k == rest) break;
      }
    }
  }
  return out;
}

}  // namespace entroscope
