#include <doctest.h>

#include <cmath>

#include "entroscope/error.hpp"
#include "entroscope/sw_sim.hpp"

using namespace entroscope;

namespace {

JointDistribution binary_pair(long flip_num, long flip_den) {
  const Rational same = Rational(flip_den - flip_num, 2 * flip_den), diff = Rational(flip_num, 2 * flip_den);
  std::vector<OutcomeProbability> e{{{0, 0}, same}, {{1, 1}, same}};
  if (flip_num) {
    e.push_back({{0, 1}, diff});
    e.push_back({{1, 0}, diff});
  }
  return make_distribution({{"x", 2}, {"y", 2}}, e);
}

std::vector<std::uint64_t> seeds(int n) {
  std::vector<std::uint64_t> s;
  for (int i = 0; i < n; ++i) s.push_back(static_cast<std::uint64_t>(i));
  return s;
}

}  // namespace

TEST_SUITE("sw-sim") {
  TEST_CASE("bin counts") {
    CHECK(build_code(binary_pair(0, 1), 4, 0.25, 1).bins == 2);
    const auto bsc = binary_pair(1, 4);
    const double h = -0.25 * std::log2(0.25) - 0.75 * std::log2(0.75);
    CHECK(binning_rate_bins(bsc, 6, 0.1) == static_cast<std::uint64_t>(std::llround(std::exp2(6 * (h + 0.1)))));
    CHECK(build_code(bsc, 3, 0.1, 0, 1).bins == 1);
  }

  TEST_CASE("determinism and budget") {
    const auto bsc = binary_pair(1, 4);
    CHECK(build_code(bsc, 6, 0.1, 42).table == build_code(bsc, 6, 0.1, 42).table);
    CHECK(build_code(bsc, 6, 0.1, 42).table != build_code(bsc, 6, 0.1, 43).table);
    try {
      build_code(bsc, 21, 0.1, 0);
      FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
    CHECK(sw_csv(sw_report(bsc, {2, 4}, 0.1, {7})) == sw_csv(sw_report(bsc, {2, 4}, 0.1, {7})));
  }

  TEST_CASE("noiseless pair: residual is exactly zero") {
    for (const auto& r : sw_report(binary_pair(0, 1), {1, 2, 3, 4}, 0.5, seeds(5))) {
      CHECK(r.h_x_given_hash_y == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(r.hash_is_function);
    }
  }

  TEST_CASE("rate zero: constant hash") {
    const auto csv = sw_csv(sw_report(binary_pair(1, 4), {2, 4}, 0.0, {0}, 1));
    CHECK(csv == "seed,N,m,H_hash,I_hash_y,H_x_given_hash_y\n"
                 "0,2,1,0.000000000000,0.000000000000,0.811278124459\n"
                 "0,4,1,0.000000000000,0.000000000000,0.811278124459\n");
  }

  TEST_CASE("invariants over many codes") {
    const auto bsc = binary_pair(1, 4);
    const double hx = 1.0;
    const double ixy = 1.0 - (-0.25 * std::log2(0.25) - 0.75 * std::log2(0.75));
    for (const auto& r : sw_report(bsc, {1, 2, 3, 4, 5, 6}, 0.1, seeds(10))) {
      CHECK(r.hash_is_function);
      CHECK(r.h_hash <= std::log2(static_cast<double>(r.bins)) / r.N + 1e-12);
      CHECK(r.h_hash <= hx + 1e-12);
      CHECK(r.i_hash_y <= ixy + 1e-12);
      CHECK(r.h_x_given_hash_y >= -1e-12);
    }
  }

  TEST_CASE("trend of the residual") {
    const auto rows = sw_report(binary_pair(1, 4), {2, 4, 6, 8}, 0.1, seeds(20));
    double mean[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < rows.size(); ++i) mean[i % 4] += rows[i].h_x_given_hash_y / 20;
    for (int i = 0; i + 1 < 4; ++i) CHECK(mean[i] >= mean[i + 1] - 0.05);
    CHECK(mean[3] <= mean[0] - 0.05);
  }
}
