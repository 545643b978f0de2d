#include <doctest.h>

#include <random>

#include "entroscope/catalog.hpp"
#include "entroscope/error.hpp"
#include "entroscope/profile.hpp"
#include "oracles.hpp"

using namespace entroscope;

namespace {

// GF(2) rank of a set of row vectors packed into bit masks.
int gf2_rank(std::vector<std::uint32_t> rows) {
  int rank = 0;
  for (int bit = 31; bit >= 0; --bit) {
    auto pivot = std::find_if(rows.begin(), rows.end(), [&](std::uint32_t r) { return r >> bit & 1u; });
    if (pivot == rows.end()) continue;
    const std::uint32_t p = *pivot;
    rows.erase(pivot);
    for (auto& r : rows)
      if (r >> bit & 1u) r ^= p;
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_SUITE("entropy-profile") {
  TEST_CASE("profile coordinates and validation") {
    CHECK_THROWS_AS(EntropyProfile({"a", "b"}, {1.0, 1.0}), Error);
    CHECK_THROWS_AS(EntropyProfile({"a"}, {-1.0}), Error);
    const auto p = EntropyProfile({"a", "b"}, {1, 1, 2});
    CHECK(p[0] == 0);
    CHECK(p[3] == 2);
    CHECK(scale(p, 2.5)[3] == 5);
    CHECK(is_polymatroid(p).polymatroid);
    const auto bad = EntropyProfile({"a", "b"}, {1, 1, 3});
    const auto v = is_polymatroid(bad);
    CHECK_FALSE(v.polymatroid);
    CHECK(v.checked == 2 + 1);
  }

  TEST_CASE("linear sources: profile equals GF(2) ranks and Ingleton holds") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
      const int k = 2 + static_cast<int>(rng() % 3);  // ambient dimension
      // Variable i is the vector of functionals rows[i] applied to a uniform x in GF(2)^k.
      std::vector<std::vector<std::uint32_t>> rows(4);
      for (auto& r : rows) {
        const int count = 1 + static_cast<int>(rng() % 2);
        for (int j = 0; j < count; ++j) r.push_back(static_cast<std::uint32_t>(rng() % (1u << k)));
      }
      std::vector<Variable> vars;
      for (int i = 0; i < 4; ++i) vars.push_back({std::string(1, static_cast<char>('a' + i)), 1ull << rows[static_cast<std::size_t>(i)].size()});
      std::vector<OutcomeProbability> entries;
      for (std::uint32_t x = 0; x < (1u << k); ++x) {
        Outcome o;
        for (const auto& r : rows) {
          std::uint32_t v = 0;
          for (std::size_t j = 0; j < r.size(); ++j) v |= static_cast<std::uint32_t>(__builtin_parity(r[j] & x)) << j;
          o.push_back(v);
        }
        entries.push_back({o, Rational(1, 1L << k)});
      }
      // Merge duplicate outcomes before building.
      std::map<Outcome, Rational> merged;
      for (const auto& e : entries) merged[e.values] += e.probability;
      std::vector<OutcomeProbability> unique;
      for (const auto& [o, p] : merged) unique.push_back({o, p});
      const auto d = make_distribution(vars, unique);
      const auto p = profile_of(d);
      for (std::uint32_t s = 1; s < 16; ++s) {
        std::vector<std::uint32_t> span;
        for (int i = 0; i < 4; ++i)
          if (s >> i & 1u) span.insert(span.end(), rows[static_cast<std::size_t>(i)].begin(), rows[static_cast<std::size_t>(i)].end());
        REQUIRE(p[s] == doctest::Approx(gf2_rank(span)).epsilon(1e-12));
      }
      CHECK(is_polymatroid(p).polymatroid);
      CHECK(ingleton(p) >= -1e-9);
      CHECK(ingleton(p, {2, 3, 0, 1}) >= -1e-9);
    }
  }

  TEST_CASE("random profiles are polymatroids") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const auto t = oracle::random_table(rng, 4, 3);
      CHECK(is_polymatroid(profile_of(oracle::to_distribution(t))).polymatroid);
    }
  }

  TEST_CASE("ingleton on four independent coins and a bad ordering") {
    std::vector<OutcomeProbability> entries;
    for (std::uint32_t x = 0; x < 16; ++x) entries.push_back({{x & 1, x >> 1 & 1, x >> 2 & 1, x >> 3 & 1}, Rational(1, 16)});
    const auto p = profile_of(make_distribution({{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}}, entries));
    CHECK(ingleton(p) == doctest::Approx(0.0));
    CHECK_THROWS_AS(ingleton(p, {0, 0, 1, 2}), Error);
  }
}
