#include "entroscope/shannon_lp.hpp"

#include <map>

#include "entroscope/error.hpp"

namespace entroscope {

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

void check_arity(int n) {
  if (n < 1 || n > kMaxLpVariables)
    fail(ErrorCode::UnsupportedArity, "LP supports 1.." + std::to_string(kMaxLpVariables) + " variables, got " +
                                          std::to_string(n));
}

// Dense tableau for: A x + I art = b, x, art >= 0, minimize sum(art).
class PhaseOne {
 public:
  PhaseOne(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
      : rows_(a.size()), structural_(rows_ ? a[0].size() : 0) {
    const std::size_t cols = structural_ + rows_;
    tab_.assign(rows_, std::vector<Rational>(cols, Rational(0)));
    rhs_ = std::move(b);
    sign_.assign(rows_, 1);
    basis_.resize(rows_);
    cost_.assign(cols, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (rhs_[i].sign() < 0) {
        sign_[i] = -1;
        rhs_[i] = -rhs_[i];
      }
      for (std::size_t j = 0; j < structural_; ++j) tab_[i][j] = sign_[i] < 0 ? -a[i][j] : a[i][j];
      tab_[i][structural_ + i] = Rational(1);
      basis_[i] = structural_ + i;
      for (std::size_t j = 0; j < structural_; ++j) cost_[j] -= tab_[i][j];
      value_ += rhs_[i];
    }
  }

  std::size_t solve() {
    std::size_t pivots = 0;
    for (;;) {
      // Bland: lowest-index improving column.
      std::size_t enter = cost_.size();
      for (std::size_t j = 0; j < cost_.size(); ++j)
        if (cost_[j].sign() < 0) {
          enter = j;
          break;
        }
      if (enter == cost_.size()) return pivots;
      // Bland: min ratio, ties by lowest basic index. Phase one is bounded
      // below by 0, so a leaving row always exists.
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (tab_[i][enter].sign() <= 0) continue;
        Rational ratio = rhs_[i] / tab_[i][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      pivot(leave, enter);
      ++pivots;
    }
  }

  bool feasible() const { return value_.is_zero(); }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(structural_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < structural_) x[basis_[i]] = rhs_[i];
    return x;
  }

  /// Dual multipliers of the original (unsigned) rows, read off the
  /// artificial columns: pi_i = 1 − reduced_cost(art_i), then row sign undone.
  std::vector<Rational> row_duals() const {
    std::vector<Rational> pi(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      pi[i] = Rational(1) - cost_[structural_ + i];
      if (sign_[i] < 0) pi[i] = -pi[i];
    }
    return pi;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Rational p = tab_[r][c];
    for (auto& v : tab_[r]) v /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || tab_[i][c].is_zero()) continue;
      const Rational f = tab_[i][c];
      for (std::size_t j = 0; j < tab_[i].size(); ++j)
        if (!tab_[r][j].is_zero()) tab_[i][j] -= f * tab_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (!cost_[c].is_zero()) {
      const Rational f = cost_[c];
      for (std::size_t j = 0; j < cost_.size(); ++j)
        if (!tab_[r][j].is_zero()) cost_[j] -= f * tab_[r][j];
      value_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> rhs_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  Rational value_;
};

Rational dot(const InfoExpression& e, const std::vector<Rational>& h) {
  Rational sum(0);
  for (const auto& [s, c] : e.terms()) sum += c * h[s - 1];
  return sum;
}

}  // namespace

std::vector<ElementalInequality> elemental_inequalities(int n) {
  check_arity(n);
  return elemental_family(default_names(n));
}

std::vector<ElementalInequality> elemental_inequalities(const std::vector<std::string>& variables) {
  check_arity(static_cast<int>(variables.size()));
  return elemental_family(variables);
}

LpResult lp_min(const InfoExpression& objective, const std::vector<InfoExpression>& cone) {
  const int n = objective.num_variables();
  if (n < 1) fail(ErrorCode::UnsupportedArity, "objective has no variables");
  for (const auto& g : cone)
    if (g.variables() != objective.variables())
      fail(ErrorCode::DimensionMismatch, "cone and objective use different variables");
  const std::size_t dim = full_mask(n);
  const std::size_t m = cone.size();

  // Row s of the Farkas system: sum_i y_i * cone_i[s] = objective[s].
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& [s, c] : cone[i].terms()) a[s - 1][i] = c;
  std::vector<Rational> b(dim, Rational(0));
  for (const auto& [s, c] : objective.terms()) b[s - 1] = c;

  PhaseOne lp(std::move(a), std::move(b));
  LpResult out;
  out.pivots = lp.solve();
  if (lp.feasible()) {
    out.outcome = LpResult::Outcome::Zero;
    out.dual_weights = lp.primal();
    return out;
  }
  // Infeasible Farkas system: h = −pi separates, cone(h) >= 0 and objective(h) < 0.
  out.outcome = LpResult::Outcome::UnboundedBelow;
  out.ray = lp.row_duals();
  for (auto& v : out.ray) v = -v;
  out.ray_value = dot(objective, out.ray);
  return out;
}

ShannonTypeVerdict is_shannon_type(const InfoExpression& e) {
  check_arity(e.num_variables());
  const auto elementals = elemental_family(e.variables());
  std::vector<InfoExpression> cone;
  cone.reserve(elementals.size());
  for (const auto& el : elementals) cone.push_back(el.expression);

  LpResult r = lp_min(e, cone);
  ShannonTypeVerdict v;
  v.variables = e.variables();
  if (r.outcome == LpResult::Outcome::Zero) {
    v.shannon_type = true;
    for (std::size_t i = 0; i < elementals.size(); ++i)
      if (!r.dual_weights[i].is_zero()) v.dual_weights.emplace_back(elementals[i].label, r.dual_weights[i]);
  } else {
    v.witness = std::move(r.ray);
    v.witness_value = r.ray_value;
  }
  if (!verify_certificate(v, e))
    fail(ErrorCode::InvalidArgument, "internal error: LP certificate failed exact re-verification");
  return v;
}

bool verify_certificate(const ShannonTypeVerdict& v, const InfoExpression& e) {
  if (v.variables != e.variables()) return false;
  const auto elementals = elemental_family(e.variables());
  if (v.shannon_type) {
    std::map<std::string, const InfoExpression*> by_label;
    for (const auto& el : elementals) by_label[el.label] = &el.expression;
    InfoExpression sum(e.variables());
    for (const auto& [label, w] : v.dual_weights) {
      auto it = by_label.find(label);
      if (it == by_label.end() || w.sign() < 0) return false;
      sum += w * *it->second;
    }
    return sum == e;
  }
  if (v.witness.size() != full_mask(e.num_variables())) return false;
  for (const auto& el : elementals)
    if (dot(el.expression, v.witness).sign() < 0) return false;
  const Rational value = dot(e, v.witness);
  return value.sign() < 0 && value == v.witness_value;
}

}  // namespace entroscope
