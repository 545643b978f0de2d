#include "entroscope/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "entroscope/error.hpp"

namespace entroscope {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kU64Max = ~std::uint64_t{0};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  u128 p = static_cast<u128>(a) * b;
  if (p > kU64Max) fail(ErrorCode::BudgetExceeded, std::string(what) + " overflows 64 bits");
  return static_cast<std::uint64_t>(p);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
  if (a > kU64Max - b) fail(ErrorCode::BudgetExceeded, std::string(what) + " overflows 64 bits");
  return a + b;
}

// Bits of `s` renumbered to positions inside `within`.
SubsetMask relative_mask(SubsetMask s, SubsetMask within) {
  SubsetMask out = 0;
  int pos = 0;
  for (int i : subset_members(within)) {
    if (s & (SubsetMask{1} << i)) out |= SubsetMask{1} << pos;
    ++pos;
  }
  return out;
}

void require_subset(const JointDistribution& d, SubsetMask s) {
  if (!is_subset(s, d.all_variables()))
    fail(ErrorCode::UnknownVariable, "subset refers to variables outside the distribution");
}

double entropy_of(const MarginalTable& t) {
  long double h = 0;
  const long double total = static_cast<long double>(t.total);
  for (std::uint64_t w : t.weights) {
    long double p = static_cast<long double>(w) / total;
    h -= p * std::log2(p);
  }
  return static_cast<double>(h);
}

}  // namespace

std::uint64_t MarginalTable::weight_of(std::uint64_t key) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return 0;
  return weights[static_cast<std::size_t>(it - keys.begin())];
}

JointDistribution JointDistribution::from_weights(std::vector<Variable> variables,
                                                  std::vector<std::uint64_t> keys,
                                                  std::vector<std::uint64_t> weights) {
  if (variables.empty()) fail(ErrorCode::InvalidArgument, "distribution needs at least one variable");
  if (static_cast<int>(variables.size()) > kMaxVariables)
    fail(ErrorCode::InvalidArgument, "too many variables");
  if (keys.empty()) fail(ErrorCode::SumNotOne, "empty support (defect 1)");
  if (!weights.empty() && weights.size() != keys.size())
    fail(ErrorCode::ArityMismatch, "weights and outcomes differ in length");

  JointDistribution d;
  d.place_.reserve(variables.size() + 1);
  std::uint64_t place = 1;
  std::unordered_set<std::string> seen;
  for (const auto& v : variables) {
    if (v.alphabet == 0 || v.alphabet > (std::uint64_t{1} << 32))
      fail(ErrorCode::InvalidArgument, "alphabet of '" + v.name + "' must be in [1, 2^32]");
    if (!seen.insert(v.name).second) fail(ErrorCode::NameCollision, "duplicate variable '" + v.name + "'");
    d.place_.push_back(place);
    u128 next = static_cast<u128>(place) * v.alphabet;
    place = next > kU64Max ? 0 : static_cast<std::uint64_t>(next);
    if (place == 0) fail(ErrorCode::BudgetExceeded, "joint alphabet does not fit in 64 bits");
  }
  d.place_.push_back(place);
  d.variables_ = std::move(variables);

  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (!std::is_sorted(keys.begin(), keys.end())) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<std::uint64_t> k2(keys.size());
    for (std::size_t i = 0; i < order.size(); ++i) k2[i] = keys[order[i]];
    keys.swap(k2);
    if (!weights.empty()) {
      std::vector<std::uint64_t> w2(weights.size());
      for (std::size_t i = 0; i < order.size(); ++i) w2[i] = weights[order[i]];
      weights.swap(w2);
    }
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i] >= place) fail(ErrorCode::OutOfAlphabet, "outcome value outside its alphabet");
    if (i > 0 && keys[i] == keys[i - 1]) fail(ErrorCode::DuplicateOutcome, "outcome listed twice");
  }

  if (weights.empty()) {
    d.total_ = keys.size();
  } else {
    std::uint64_t g = 0;
    std::uint64_t total = 0;
    for (std::uint64_t w : weights) {
      if (w == 0) fail(ErrorCode::NonPositiveProbability, "zero-mass outcome");
      g = std::gcd(g, w);
      total = checked_add(total, w, "total weight");
    }
    if (g > 1) {
      for (auto& w : weights) w /= g;
      total /= g;
    }
    if (std::all_of(weights.begin(), weights.end(), [](std::uint64_t w) { return w == 1; }))
      weights.clear();
    d.total_ = total;
  }
  d.keys_ = std::move(keys);
  d.weights_ = std::move(weights);
  return d;
}

std::vector<std::string> JointDistribution::names() const {
  std::vector<std::string> out;
  out.reserve(variables_.size());
  for (const auto& v : variables_) out.push_back(v.name);
  return out;
}

std::uint32_t JointDistribution::value(std::size_t i, int var) const {
  auto v = static_cast<std::size_t>(var);
  return static_cast<std::uint32_t>((keys_[i] / place_[v]) % variables_[v].alphabet);
}

Outcome JointDistribution::outcome(std::size_t i) const {
  Outcome out(variables_.size());
  for (int v = 0; v < num_variables(); ++v) out[static_cast<std::size_t>(v)] = value(i, v);
  return out;
}

Rational JointDistribution::probability(std::size_t i) const {
  return Rational(mpq_class(mpz_class(std::to_string(weight(i))), mpz_class(std::to_string(total_))));
}

int JointDistribution::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return static_cast<int>(i);
  return -1;
}

SubsetMask JointDistribution::subset_of(const std::vector<std::string>& names) const {
  SubsetMask s = 0;
  for (const auto& n : names) {
    int i = index_of(n);
    if (i < 0) fail(ErrorCode::UnknownVariable, "unknown variable '" + n + "'");
    s |= SubsetMask{1} << i;
  }
  return s;
}

std::uint64_t JointDistribution::encode(const Outcome& values) const {
  if (values.size() != variables_.size())
    fail(ErrorCode::ArityMismatch, "outcome has " + std::to_string(values.size()) + " values, expected " +
                                       std::to_string(variables_.size()));
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= variables_[i].alphabet)
      fail(ErrorCode::OutOfAlphabet, "value " + std::to_string(values[i]) + " outside alphabet of '" +
                                         variables_[i].name + "'");
    key += values[i] * place_[i];
  }
  return key;
}

std::uint64_t JointDistribution::project(std::uint64_t key, SubsetMask subset) const {
  if (subset == all_variables()) return key;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (int i : subset_members(subset)) {
    auto v = static_cast<std::size_t>(i);
    out += ((key / place_[v]) % variables_[v].alphabet) * place;
    place *= variables_[v].alphabet;
  }
  return out;
}

MarginalTable JointDistribution::marginal_table(SubsetMask subset) const {
  require_subset(*this, subset);
  MarginalTable t;
  t.total = total_;
  if (subset == 0) {
    t.keys = {0};
    t.weights = {total_};
    return t;
  }
  if (subset == all_variables()) {
    t.keys = keys_;
    t.weights = weights_.empty() ? std::vector<std::uint64_t>(keys_.size(), 1) : weights_;
    return t;
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i) rows[i] = {project(keys_[i], subset), weight(i)};
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [k, w] : rows) {
    if (!t.keys.empty() && t.keys.back() == k) {
      t.weights.back() += w;
    } else {
      t.keys.push_back(k);
      t.weights.push_back(w);
    }
  }
  return t;
}

JointDistribution make_distribution(std::vector<Variable> variables,
                                    const std::vector<OutcomeProbability>& entries) {
  if (entries.empty()) fail(ErrorCode::SumNotOne, "no outcomes (defect 1)");
  mpz_class lcm = 1;
  Rational sum(0);
  for (const auto& e : entries) {
    if (e.values.size() != variables.size())
      fail(ErrorCode::ArityMismatch, "outcome has " + std::to_string(e.values.size()) +
                                         " values, expected " + std::to_string(variables.size()));
    if (e.probability.sign() <= 0)
      fail(ErrorCode::NonPositiveProbability, "probability " + e.probability.to_string() + " is not positive");
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.probability.raw().get_den().get_mpz_t());
    sum += e.probability;
  }
  if (sum != Rational(1)) {
    Rational defect = Rational(1) - sum;
    fail(ErrorCode::SumNotOne, "probabilities sum to " + sum.to_string() + " (defect " + defect.to_string() + ")");
  }
  if (!Rational(mpq_class(lcm)).fits_uint64())
    fail(ErrorCode::BudgetExceeded, "common denominator does not fit in 64 bits");

  // Keys are computed against a throwaway distribution carrying the radix.
  auto shape = JointDistribution::from_weights(variables, {0}, {});
  std::vector<std::uint64_t> keys;
  std::vector<std::uint64_t> weights;
  keys.reserve(entries.size());
  weights.reserve(entries.size());
  for (const auto& e : entries) {
    keys.push_back(shape.encode(e.values));
    mpq_class w = e.probability.raw() * lcm;
    weights.push_back(Rational(w).numerator_u64());
  }
  return JointDistribution::from_weights(std::move(variables), std::move(keys), std::move(weights));
}

JointDistribution marginalize(const JointDistribution& d, SubsetMask keep) {
  if (keep == 0) fail(ErrorCode::EmptySubset, "cannot marginalize onto the empty set");
  require_subset(d, keep);
  if (keep == d.all_variables()) return d;
  std::vector<Variable> vars;
  for (int i : subset_members(keep)) vars.push_back(d.variables()[static_cast<std::size_t>(i)]);
  MarginalTable t = d.marginal_table(keep);
  return JointDistribution::from_weights(std::move(vars), std::move(t.keys), std::move(t.weights));
}

JointDistribution iid_power(const JointDistribution& d, int copies, std::uint64_t budget) {
  if (copies < 1) fail(ErrorCode::InvalidArgument, "number of copies must be >= 1");
  if (copies == 1) return d;
  std::uint64_t support = 1;
  std::uint64_t total = 1;
  for (int c = 0; c < copies; ++c) {
    u128 s = static_cast<u128>(support) * d.support_size();
    if (s > budget)
      fail(ErrorCode::BudgetExceeded, "support of " + std::to_string(copies) + " copies exceeds budget " +
                                          std::to_string(budget));
    support = static_cast<std::uint64_t>(s);
    total = checked_mul(total, d.total_weight(), "product denominator");
  }
  std::vector<Variable> vars = d.variables();
  for (auto& v : vars) {
    std::uint64_t a = 1;
    for (int c = 0; c < copies; ++c) a = checked_mul(a, v.alphabet, "tuple alphabet");
    v.alphabet = a;
  }
  auto shape = JointDistribution::from_weights(vars, {0}, {});

  const int n = d.num_variables();
  std::vector<std::uint64_t> keys;
  std::vector<std::uint64_t> weights;
  keys.reserve(support);
  if (!d.is_uniform()) weights.reserve(support);
  std::vector<std::size_t> idx(static_cast<std::size_t>(copies), 0);
  Outcome values(static_cast<std::size_t>(n));
  for (;;) {
    std::uint64_t w = 1;
    std::fill(values.begin(), values.end(), 0);
    // Copy c contributes digit c (copy 0 least significant) of each tuple value.
    for (int c = copies - 1; c >= 0; --c) {
      std::size_t row = idx[static_cast<std::size_t>(c)];
      for (int v = 0; v < n; ++v) {
        auto& x = values[static_cast<std::size_t>(v)];
        x = static_cast<std::uint32_t>(x * d.variables()[static_cast<std::size_t>(v)].alphabet + d.value(row, v));
      }
      w *= d.weight(row);
    }
    keys.push_back(shape.encode(values));
    if (!d.is_uniform()) weights.push_back(w);
    int c = 0;
    for (; c < copies; ++c) {
      auto& i = idx[static_cast<std::size_t>(c)];
      if (++i < d.support_size()) break;
      i = 0;
    }
    if (c == copies) break;
  }
  return JointDistribution::from_weights(std::move(vars), std::move(keys), std::move(weights));
}

JointDistribution apply_function(const JointDistribution& d, SubsetMask sources,
                                 const OutcomeFunction& fn, const std::string& name,
                                 std::uint64_t alphabet) {
  if (sources == 0) fail(ErrorCode::EmptySubset, "function needs at least one source variable");
  require_subset(d, sources);
  if (d.index_of(name) >= 0) fail(ErrorCode::NameCollision, "variable '" + name + "' already exists");
  std::vector<Variable> vars = d.variables();
  vars.push_back({name, alphabet});
  const auto members = subset_members(sources);
  std::vector<std::uint32_t> args(members.size());
  std::vector<std::uint64_t> keys(d.support_size());
  std::vector<std::uint64_t> weights;
  if (!d.is_uniform()) weights.resize(d.support_size());
  // The new variable is the most significant digit.
  std::uint64_t place = 1;
  for (const auto& v : d.variables()) place *= v.alphabet;
  for (std::size_t i = 0; i < d.support_size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) args[j] = d.value(i, members[j]);
    auto out = fn(args);
    if (!out || *out >= alphabet)
      fail(ErrorCode::PartialFunction, "function undefined or out of range on a supported input");
    keys[i] = d.key(i) + static_cast<std::uint64_t>(*out) * place;
    if (!weights.empty()) weights[i] = d.weight(i);
  }
  return JointDistribution::from_weights(std::move(vars), std::move(keys), std::move(weights));
}

double entropy(const JointDistribution& d, SubsetMask subset) {
  if (subset == 0) fail(ErrorCode::EmptySubset, "entropy of the empty set");
  return entropy_of(d.marginal_table(subset));
}

double conditional_entropy(const JointDistribution& d, SubsetMask target, SubsetMask given) {
  if (target == 0) fail(ErrorCode::EmptySubset, "conditional entropy needs a target");
  double joint = entropy(d, target | given);
  return given == 0 ? joint : joint - entropy(d, given);
}

double mutual_information(const JointDistribution& d, SubsetMask a, SubsetMask b, SubsetMask given) {
  if (a == 0 || b == 0) fail(ErrorCode::EmptySubset, "mutual information needs non-empty arguments");
  auto h = [&](SubsetMask s) { return s == 0 ? 0.0 : entropy(d, s); };
  return h(a | given) + h(b | given) - h(a | b | given) - h(given);
}

bool is_conditionally_independent(const JointDistribution& d, SubsetMask a, SubsetMask b,
                                  SubsetMask given) {
  if (a == 0 || b == 0) fail(ErrorCode::EmptySubset, "independence test needs non-empty A and B");
  if ((a & b) || (a & given) || (b & given))
    fail(ErrorCode::OverlappingSubsets, "A, B and C must be pairwise disjoint");
  require_subset(d, a | b | given);

  const SubsetMask all = a | b | given;
  JointDistribution m = marginalize(d, all);
  const SubsetMask ra = relative_mask(a, all);
  const SubsetMask rb = relative_mask(b, all);
  const SubsetMask rc = relative_mask(given, all);
  MarginalTable ac = m.marginal_table(ra | rc);
  MarginalTable bc = m.marginal_table(rb | rc);
  MarginalTable c = m.marginal_table(rc);
  // p(abc) p(c) = p(ac) p(bc) on the support forces the full product support,
  // because the factorized masses then already sum to one.
  for (std::size_t i = 0; i < m.support_size(); ++i) {
    const std::uint64_t key = m.key(i);
    const u128 lhs = static_cast<u128>(m.weight(i)) * c.weight_of(m.project(key, rc));
    const u128 rhs = static_cast<u128>(ac.weight_of(m.project(key, ra | rc))) *
                     bc.weight_of(m.project(key, rb | rc));
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_functionally_dependent(const JointDistribution& d, SubsetMask target, SubsetMask given) {
  if (target == 0) fail(ErrorCode::EmptySubset, "dependence test needs a target");
  require_subset(d, target | given);
  return d.marginal_table(target | given).size() == d.marginal_table(given).size();
}

QuasiUniformReport is_quasi_uniform(const JointDistribution& d) {
  QuasiUniformReport report;
  for (SubsetMask s = 1; s <= d.all_variables(); ++s) {
    MarginalTable t = d.marginal_table(s);
    bool flat = std::all_of(t.weights.begin(), t.weights.end(),
                            [&](std::uint64_t w) { return w == t.weights.front(); });
    report.subsets.push_back({s, flat});
    report.quasi_uniform = report.quasi_uniform && flat;
  }
  return report;
}

}  // namespace entroscope
