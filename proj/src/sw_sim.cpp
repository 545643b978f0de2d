#include "entroscope/sw_sim.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "entroscope/error.hpp"

namespace entroscope {

namespace {

constexpr SubsetMask kX = 1, kY = 2, kHash = 4;

void require_pair(const JointDistribution& pair) {
  if (pair.num_variables() != 2) fail(ErrorCode::ArityMismatch, "sw-sim needs a distribution over (x, y)");
}

std::uint64_t states(const JointDistribution& pair, int N, std::uint64_t budget) {
  if (N < 1) fail(ErrorCode::InvalidArgument, "N must be >= 1");
  std::uint64_t count = 1;
  const std::uint64_t alphabet = pair.variables()[0].alphabet;
  for (int i = 0; i < N; ++i) {
    if (count > budget / alphabet)
      fail(ErrorCode::BudgetExceeded, "x-alphabet^" + std::to_string(N) + " exceeds " + std::to_string(budget) + " states");
    count *= alphabet;
  }
  return count;
}

}  // namespace

std::uint64_t binning_rate_bins(const JointDistribution& pair, int N, double delta) {
  require_pair(pair);
  if (!(delta >= 0) || !std::isfinite(delta)) fail(ErrorCode::InvalidArgument, "delta must be finite and >= 0");
  const double rate = conditional_entropy(pair, kX, kY) + delta;
  const double m = std::round(std::exp2(N * rate));
  if (m > 4294967295.0) fail(ErrorCode::BudgetExceeded, "bin count exceeds 2^32");
  return m < 1 ? 1 : static_cast<std::uint64_t>(m);
}

BinningCode build_code(const JointDistribution& pair, int N, double delta, std::uint64_t seed,
                       std::optional<std::uint64_t> forced_bins, std::uint64_t state_budget) {
  require_pair(pair);
  const std::uint64_t count = states(pair, N, state_budget);
  BinningCode code;
  code.N = N;
  code.seed = seed;
  code.bins = forced_bins ? *forced_bins : binning_rate_bins(pair, N, delta);
  if (code.bins < 1 || code.bins > 4294967295ull) fail(ErrorCode::InvalidArgument, "bin count must be in [1, 2^32)");
  std::mt19937_64 rng(seed);
  code.table.resize(count);
  for (auto& bin : code.table) bin = static_cast<std::uint32_t>(rng() % code.bins);
  return code;
}

JointDistribution hashed_system(const JointDistribution& pair, const BinningCode& code, std::uint64_t budget) {
  require_pair(pair);
  const JointDistribution power = iid_power(pair, code.N, budget);
  if (power.variables()[0].alphabet != code.table.size())
    fail(ErrorCode::DimensionMismatch, "binning table does not match x-alphabet^N");
  const std::string name = power.variables()[0].name + "_hash";
  return apply_function(
      power, kX, [&](std::span<const std::uint32_t> v) -> std::optional<std::uint32_t> { return code(v[0]); }, name,
      code.bins);
}

std::vector<SwRow> sw_report(const JointDistribution& pair, const std::vector<int>& Ns, double delta,
                             const std::vector<std::uint64_t>& seeds, std::optional<std::uint64_t> forced_bins,
                             std::uint64_t state_budget) {
  std::vector<SwRow> rows;
  for (std::uint64_t seed : seeds) {
    for (int N : Ns) {
      const BinningCode code = build_code(pair, N, delta, seed, forced_bins, state_budget);
      const JointDistribution d = hashed_system(pair, code);
      SwRow r;
      r.seed = seed;
      r.N = N;
      r.bins = code.bins;
      r.h_hash = entropy(d, kHash) / N;
      r.i_hash_y = mutual_information(d, kHash, kY) / N;
      r.h_x_given_hash_y = conditional_entropy(d, kX, kHash | kY) / N;
      r.hash_is_function = is_functionally_dependent(d, kHash, kX);
      rows.push_back(r);
    }
  }
  return rows;
}

std::string sw_csv(const std::vector<SwRow>& rows) {
  std::string out = "seed,N,m,H_hash,I_hash_y,H_x_given_hash_y\n";
  char buf[256];
  auto z = [](double v) { return std::abs(v) < 5e-13 ? 0.0 : v; };
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%llu,%d,%llu,%.12f,%.12f,%.12f\n", static_cast<unsigned long long>(r.seed), r.N,
                  static_cast<unsigned long long>(r.bins), z(r.h_hash), z(r.i_hash_y), z(r.h_x_given_hash_y));
    out += buf;
  }
  return out;
}

}  // namespace entroscope
