#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entroscope/distribution.hpp"

namespace entroscope {

/// Largest x-alphabet^N a binning table may enumerate.
inline constexpr std::uint64_t kMaxBinningStates = 1'000'000;

/// Random binning of x^N into m bins, drawn from mt19937_64(seed) as
/// rng() % m in state order.
struct BinningCode {
  int N = 0;
  std::uint64_t bins = 1;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> table;  // indexed by the packed x^N value

  std::uint32_t operator()(std::uint64_t x) const { return table.at(x); }
};

/// Bin count round(2^{N (H(x|y) + delta)}), at least 1.
std::uint64_t binning_rate_bins(const JointDistribution& pair, int N, double delta);

/// `pair` is a distribution over (x, y), x first. `forced_bins` overrides the
/// rate formula. Errors: BudgetExceeded, InvalidArgument, ArityMismatch.
BinningCode build_code(const JointDistribution& pair, int N, double delta, std::uint64_t seed,
                       std::optional<std::uint64_t> forced_bins = std::nullopt,
                       std::uint64_t state_budget = kMaxBinningStates);

/// Joint of (x^N, y^N, x') with x' = code(x^N).
JointDistribution hashed_system(const JointDistribution& pair, const BinningCode& code,
                                std::uint64_t budget = kDefaultSupportBudget);

struct SwRow {
  std::uint64_t seed = 0;
  int N = 0;
  std::uint64_t bins = 0;
  double h_hash = 0;            // H(X')/N
  double i_hash_y = 0;          // I(X';Y)/N
  double h_x_given_hash_y = 0;  // H(X|X',Y)/N
  bool hash_is_function = false;  // H(X'|X) = 0, tested exactly
};

/// One row per (seed, N), seeds outer. All values are exact entropies of the
/// constructed finite distribution.
std::vector<SwRow> sw_report(const JointDistribution& pair, const std::vector<int>& Ns, double delta,
                             const std::vector<std::uint64_t>& seeds,
                             std::optional<std::uint64_t> forced_bins = std::nullopt,
                             std::uint64_t state_budget = kMaxBinningStates);

/// Header `seed,N,m,H_hash,I_hash_y,H_x_given_hash_y` plus one line per row.
std::string sw_csv(const std::vector<SwRow>& rows);

}  // namespace entroscope
