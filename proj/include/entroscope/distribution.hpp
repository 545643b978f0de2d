#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entroscope/rational.hpp"
#include "entroscope/subset.hpp"

namespace entroscope {

inline constexpr std::uint64_t kDefaultSupportBudget = 100'000'000;

struct Variable {
  std::string name;
  std::uint64_t alphabet = 0;

  friend bool operator==(const Variable&, const Variable&) = default;
};

using Outcome = std::vector<std::uint32_t>;

/// Marginal pmf over a subset, as integer weights over the parent's total.
/// Keys use a mixed radix over the subset's variables in declared order.
struct MarginalTable {
  std::vector<std::uint64_t> keys;     // ascending
  std::vector<std::uint64_t> weights;  // parallel to keys
  std::uint64_t total = 0;

  std::size_t size() const { return keys.size(); }
  /// Weight of a projected key, 0 when absent.
  std::uint64_t weight_of(std::uint64_t key) const;
};

/// Finite joint distribution with exact rational probabilities.
///
/// Probabilities are held as positive integer weights over one common
/// denominator, reduced by their gcd, so p(outcome) = weight / total. Outcomes
/// are packed into mixed-radix keys (variable 0 least significant) and kept
/// sorted; zero-mass outcomes never appear.
class JointDistribution {
 public:
  /// Validating constructor over packed keys. `weights` empty means every
  /// outcome has weight 1. Keys need not be sorted; duplicates are rejected.
  static JointDistribution from_weights(std::vector<Variable> variables,
                                        std::vector<std::uint64_t> keys,
                                        std::vector<std::uint64_t> weights);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  std::vector<std::string> names() const;
  SubsetMask all_variables() const { return full_mask(num_variables()); }

  std::size_t support_size() const { return keys_.size(); }
  std::uint64_t key(std::size_t i) const { return keys_[i]; }
  std::uint32_t value(std::size_t i, int var) const;
  Outcome outcome(std::size_t i) const;
  std::uint64_t weight(std::size_t i) const { return weights_.empty() ? 1 : weights_[i]; }
  std::uint64_t total_weight() const { return total_; }
  Rational probability(std::size_t i) const;
  bool is_uniform() const { return weights_.empty(); }

  /// -1 when absent.
  int index_of(std::string_view name) const;
  /// Mask of the named variables; throws UnknownVariable.
  SubsetMask subset_of(const std::vector<std::string>& names) const;

  /// Packs a full outcome into its key; throws OutOfAlphabet / ArityMismatch.
  std::uint64_t encode(const Outcome& values) const;
  /// Projects a packed key onto a subset (subset radix).
  std::uint64_t project(std::uint64_t key, SubsetMask subset) const;

  MarginalTable marginal_table(SubsetMask subset) const;

  friend bool operator==(const JointDistribution& a, const JointDistribution& b) {
    return a.variables_ == b.variables_ && a.keys_ == b.keys_ && a.weights_ == b.weights_ &&
           a.total_ == b.total_;
  }

 private:
  JointDistribution() = default;

  std::vector<Variable> variables_;
  std::vector<std::uint64_t> place_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t total_ = 1;
};

/// One (outcome, probability) entry of a distribution literal.
struct OutcomeProbability {
  Outcome values;
  Rational probability;
};

/// Validates and builds a distribution; probabilities must sum to exactly 1.
/// Errors: SumNotOne (message carries the exact defect), ArityMismatch,
/// NonPositiveProbability, OutOfAlphabet, DuplicateOutcome.
JointDistribution make_distribution(std::vector<Variable> variables,
                                    const std::vector<OutcomeProbability>& entries);

JointDistribution marginalize(const JointDistribution& d, SubsetMask keep);

/// N independent copies; each variable becomes an N-tuple valued variable with
/// alphabet |X|^N. Throws BudgetExceeded when the support would exceed `budget`.
JointDistribution iid_power(const JointDistribution& d, int copies,
                            std::uint64_t budget = kDefaultSupportBudget);

/// Deterministic map from the source variables' values (in declared order) to
/// a value of the new variable; nullopt marks an undefined input.
using OutcomeFunction = std::function<std::optional<std::uint32_t>(std::span<const std::uint32_t>)>;

/// Appends `name` = fn(sources). The function is evaluated on every supported
/// source value. Errors: NameCollision, PartialFunction, EmptySubset.
JointDistribution apply_function(const JointDistribution& d, SubsetMask sources,
                                 const OutcomeFunction& fn, const std::string& name,
                                 std::uint64_t alphabet);

/// Shannon entropy in bits of the marginal on `subset`.
double entropy(const JointDistribution& d, SubsetMask subset);
/// H(target | given); given may be empty.
double conditional_entropy(const JointDistribution& d, SubsetMask target, SubsetMask given);
/// I(a; b | given).
double mutual_information(const JointDistribution& d, SubsetMask a, SubsetMask b,
                          SubsetMask given = 0);

/// Exact test of p(A,B|c) = p(A|c) p(B|c) on every c in the support of C.
bool is_conditionally_independent(const JointDistribution& d, SubsetMask a, SubsetMask b,
                                  SubsetMask given);

/// Exact test of H(target | given) = 0: each supported value of `given`
/// determines `target`.
bool is_functionally_dependent(const JointDistribution& d, SubsetMask target,
                               SubsetMask given);

struct FlatnessVerdict {
  SubsetMask subset = 0;
  bool flat = false;
};

struct QuasiUniformReport {
  bool quasi_uniform = true;
  std::vector<FlatnessVerdict> subsets;  // every non-empty subset, ascending mask
};

QuasiUniformReport is_quasi_uniform(const JointDistribution& d);

}  // namespace entroscope
