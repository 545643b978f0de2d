#include "entroscope/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "entroscope/error.hpp"
#include "entroscope/parser.hpp"

namespace entroscope {

namespace {

InfoExpression q4(const char* text) { return parse_expression(text, quadruple_names()); }

ConditionalInequality make(std::string name, std::vector<const char*> constraints, const char* body) {
  ConditionalInequality out{std::move(name), {}, q4(body)};
  for (const char* c : constraints) out.constraints.push_back(q4(c));
  return out;
}

constexpr const char* kIngletonBody = "I(c;d|a) + I(c;d|b) + I(a;b) - I(c;d)";

std::string constraint_label(const InfoExpression& e) {
  if (auto p = classify(e)) return pattern_label(*p, e.variables());
  return print_canonical(e);
}

ConditionalVerdict finish(const ConditionalInequality& ineq, ConditionalVerdict v,
                          const EntropyProfile& p, double tol) {
  v.name = ineq.name;
  for (const auto& c : v.constraints) {
    if (c.status == ConstraintStatus::Violated) v.applicable = false;
    if (c.status == ConstraintStatus::NumericZero) v.numeric_warning = true;
  }
  if (v.applicable) {
    v.body = evaluate(rebase(ineq.body, p.variables()), p);
    v.holds = *v.body >= -tol;
  }
  return v;
}

// Names of `ineq` when `d` has them all, otherwise positional.
std::vector<std::string> target_names(const std::vector<std::string>& ineq_vars,
                                      const std::vector<std::string>& dist_vars) {
  bool by_name = std::all_of(ineq_vars.begin(), ineq_vars.end(), [&](const std::string& n) {
    return std::find(dist_vars.begin(), dist_vars.end(), n) != dist_vars.end();
  });
  if (by_name) return ineq_vars;
  if (ineq_vars.size() != dist_vars.size())
    fail(ErrorCode::DimensionMismatch, "inequality has " + std::to_string(ineq_vars.size()) +
                                           " variables, data has " + std::to_string(dist_vars.size()));
  return dist_vars;
}

}  // namespace

const std::vector<std::string>& quadruple_names() {
  static const std::vector<std::string> kNames{"a", "b", "c", "d"};
  return kNames;
}

ConditionalInequality matus_star(int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "matus-star needs k >= 1");
  ConditionalInequality out{"matus-star(" + std::to_string(k) + ")", {},
                            q4("I(c;d|a) + I(c;d|b) + I(a;b) - I(c;d)")};
  out.body += Rational(1, k) * q4("I(c;d|a)");
  out.body += Rational(k + 1, 2) * q4("I(a;c|d) + I(a;d|c)");
  return out;
}

ConditionalInequality find_inequality(const std::string& name) {
  if (name == "zy98")
    return make(name, {}, "2*I(c;d|a) + I(c;d|b) + I(a;b) + I(a;c|d) + I(a;d|c) - I(c;d)");
  if (name == "cond1") return make(name, {"I(a;b|c)", "I(a;b)"}, "I(c;d|a) + I(c;d|b) - I(c;d)");
  if (name == "cond2") return make(name, {"I(a;b|c)", "I(b;d|c)"}, kIngletonBody);
  if (name == "cond3") return make(name, {"I(a;b|c)", "H(c|a,b)"}, kIngletonBody);
  if (name == "cond4") return make(name, {"I(a;c|d)", "I(a;d|c)"}, kIngletonBody);
  if (name == "ingleton") return make(name, {}, kIngletonBody);
  const std::string prefix = "matus-star(";
  if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size() + 1 && name.back() == ')') {
    int k = 0;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size() - 1;
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc() && ptr == last && k >= 1) return matus_star(k);
  }
  fail(ErrorCode::UnknownInequality, "unknown inequality '" + name + "'");
}

const Catalog& catalog() {
  static const Catalog kCatalog = [] {
    Catalog c;
    for (const char* n : {"zy98", "cond1", "cond2", "cond3", "cond4"}) c.families.push_back(find_inequality(n));
    c.families.push_back(matus_star(1));
    c.basic = elemental_family(quadruple_names());
    return c;
  }();
  return kCatalog;
}

double ingleton(const EntropyProfile& p, std::array<int, 4> ordering) {
  if (p.num_variables() != 4) fail(ErrorCode::DimensionMismatch, "Ingleton needs a 4-variable profile");
  std::array<int, 4> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{0, 1, 2, 3}) fail(ErrorCode::InvalidArgument, "ordering must permute 0..3");
  std::vector<std::string> roles(4);
  for (int r = 0; r < 4; ++r) roles[static_cast<std::size_t>(r)] = p.variables()[static_cast<std::size_t>(ordering[static_cast<std::size_t>(r)])];
  // Parse over role names, then rename into profile order.
  InfoExpression role_expr = parse_expression(kIngletonBody, quadruple_names());
  InfoExpression e(p.variables());
  for (const auto& [s, c] : role_expr.terms()) {
    SubsetMask m = 0;
    for (int r : subset_members(s)) m |= SubsetMask{1} << ordering[static_cast<std::size_t>(r)];
    e.add_term(m, c);
  }
  return evaluate(e, p);
}

InfoExpression rebase(const InfoExpression& e, const std::vector<std::string>& variables) {
  if (e.variables() == variables) return e;
  std::vector<int> map(e.variables().size());
  for (std::size_t i = 0; i < e.variables().size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), e.variables()[i]);
    if (it == variables.end()) fail(ErrorCode::UnknownVariable, "variable '" + e.variables()[i] + "' not present");
    map[i] = static_cast<int>(it - variables.begin());
  }
  InfoExpression out(variables);
  for (const auto& [s, c] : e.terms()) {
    SubsetMask m = 0;
    for (int i : subset_members(s)) m |= SubsetMask{1} << map[static_cast<std::size_t>(i)];
    out.add_term(m, c);
  }
  return out;
}

std::optional<bool> certify_zero(const InfoExpression& e, const JointDistribution& d) {
  auto p = classify(e);
  if (!p) return std::nullopt;
  const InfoExpression here = rebase(e, d.names());
  p = classify(here);
  if (p->kind == InfoPattern::Kind::MutualInformation)
    return is_conditionally_independent(d, p->first, p->second, p->given);
  return is_functionally_dependent(d, p->first, p->given);
}

namespace {

InfoExpression positional(const InfoExpression& e, const std::vector<std::string>& names) {
  if (e.variables() == names) return e;
  InfoExpression out(names);
  for (const auto& [s, c] : e.terms()) out.add_term(s, c);
  return out;
}

}  // namespace

InfoExpression align_variables(const InfoExpression& e, const std::vector<std::string>& variables) {
  const auto names = target_names(e.variables(), variables);
  return rebase(positional(e, names), variables);
}

ConditionalVerdict check_conditional(const ConditionalInequality& ineq, const JointDistribution& d,
                                     double tol) {
  const auto names = target_names(ineq.body.variables(), d.names());
  ConditionalInequality local = ineq;
  if (names != ineq.body.variables()) {
    local.body = positional(ineq.body, names);
    for (auto& c : local.constraints) c = positional(c, names);
  }
  const EntropyProfile p = profile_of(d);
  ConditionalVerdict v;
  for (const auto& c : local.constraints) {
    ConstraintCheck check{constraint_label(c), ConstraintStatus::Violated, evaluate(rebase(c, p.variables()), p)};
    if (auto exact = certify_zero(c, d)) {
      check.status = *exact ? ConstraintStatus::CertifiedZero : ConstraintStatus::Violated;
    } else {
      check.status = std::abs(check.value) <= tol ? ConstraintStatus::NumericZero : ConstraintStatus::Violated;
    }
    v.constraints.push_back(std::move(check));
  }
  return finish(local, std::move(v), p, tol);
}

ConditionalVerdict check_conditional(const ConditionalInequality& ineq, const EntropyProfile& p,
                                     double tol) {
  const auto names = target_names(ineq.body.variables(), p.variables());
  ConditionalInequality local = ineq;
  if (names != ineq.body.variables()) {
    local.body = positional(ineq.body, names);
    for (auto& c : local.constraints) c = positional(c, names);
  }
  ConditionalVerdict v;
  for (const auto& c : local.constraints) {
    const double value = evaluate(rebase(c, p.variables()), p);
    v.constraints.push_back({constraint_label(c),
                             std::abs(value) <= tol ? ConstraintStatus::NumericZero : ConstraintStatus::Violated,
                             value});
  }
  return finish(local, std::move(v), p, tol);
}

}  // namespace entroscope
