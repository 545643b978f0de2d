#include <doctest.h>

#include <cmath>
#include <set>
#include <tuple>

#include "entroscope/error.hpp"
#include "entroscope/fq_example.hpp"
#include "oracles.hpp"

using namespace entroscope;

namespace {

using Tuple = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t,
                         std::uint32_t>;

bool small_prime(std::uint32_t n) {
  for (std::uint32_t k = 2; k < n; ++k)
    if (n % k == 0) return false;
  return n >= 2;
}

// Every (line, A, B, parabola) found by evaluating polynomials at every field
// point: A, B on the line, D − C vanishes at A and B and nowhere else.
std::set<Tuple> search_quadruples(std::uint32_t q) {
  std::set<Tuple> out;
  for (std::uint32_t c0 = 0; c0 < q; ++c0)
    for (std::uint32_t c1 = 0; c1 < q; ++c1)
      for (std::uint32_t d0 = 0; d0 < q; ++d0)
        for (std::uint32_t d1 = 0; d1 < q; ++d1)
          for (std::uint32_t d2 = 1; d2 < q; ++d2) {
            std::vector<std::uint32_t> roots;
            for (std::uint32_t x = 0; x < q; ++x) {
              const std::uint64_t p = (d0 + std::uint64_t{d1} * x + std::uint64_t{d2} * x * x + q * q - c0 - std::uint64_t{c1} * x % q) % q;
              if (p == 0) roots.push_back(x);
            }
            if (roots.size() == 2) {
              out.insert({c0, c1, roots[0], roots[1], d0, d1, d2});
              out.insert({c0, c1, roots[1], roots[0], d0, d1, d2});
            } else if (roots.size() == 1) {
              out.insert({c0, c1, roots[0], roots[0], d0, d1, d2});
            }
          }
  return out;
}

}  // namespace

TEST_SUITE("fq-example") {
  TEST_CASE("prime field") {
    CHECK_THROWS_AS(PrimeField(4), Error);
    PrimeField f(7);
    CHECK(f.mul(f.inv(3), 3) == 1);
    CHECK(f.pow(3, 6) == 1);
    CHECK(next_prime(13) == 17);
    for (std::uint32_t n = 0; n < 200; ++n) CHECK(is_prime(n) == small_prime(n));
  }

  TEST_CASE("enumeration equals the polynomial search for q <= 7") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
      PrimeField f(q);
      std::set<Tuple> listed;
      std::size_t count = 0;
      for_each_quadruple(f, [&](const QuadrupleOutcome& o) {
        listed.insert({o.c0, o.c1, o.xa, o.xb, o.d0, o.d1, o.d2});
        ++count;
        REQUIRE(outcome_satisfies_construction(o, f));
      });
      CHECK(count == listed.size());
      CHECK(count == example_support_size(q));
      CHECK(listed == search_quadruples(q));
    }
  }

  TEST_CASE("parabola count per configuration is q - 1 for q <= 13") {
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
      // For a fixed line and abscissas, count parabolas meeting the line only there.
      const std::uint32_t c0 = 1 % q, c1 = 2 % q;
      for (std::uint32_t xa = 0; xa < q; xa += 3)
        for (std::uint32_t xb = 0; xb < q; xb += 2) {
          int hits = 0;
          for (std::uint32_t d0 = 0; d0 < q; ++d0)
            for (std::uint32_t d1 = 0; d1 < q; ++d1)
              for (std::uint32_t d2 = 1; d2 < q; ++d2) {
                std::set<std::uint32_t> roots;
                for (std::uint32_t x = 0; x < q; ++x)
                  if ((d0 + std::uint64_t{d1} * x + std::uint64_t{d2} * x * x) % q == (c0 + std::uint64_t{c1} * x) % q)
                    roots.insert(x);
                if (roots == std::set<std::uint32_t>{xa, xb}) ++hits;
              }
          CHECK(hits == static_cast<int>(q - 1));
        }
    }
  }

  TEST_CASE("closed-form profile matches brute force, map oracle at q = 3") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
      const auto brute = profile_of(construct_example(q));
      const auto closed = closed_form_profile(q);
      for (SubsetMask s = 1; s < 16; ++s) CHECK(brute[s] == doctest::Approx(closed[s]).epsilon(1e-9));
    }
    PrimeField f(3);
    QuadrupleCodec codec{3};
    oracle::Table t;
    t.alphabets = {9, 9, 9, 18};
    for_each_quadruple(f, [&](const QuadrupleOutcome& o) {
      t.weight[codec.encode(o, f)] = 1;
      ++t.total;
    });
    const auto closed = closed_form_profile(3);
    for (std::uint32_t s = 1; s < 16; ++s) CHECK(oracle::entropy(t, s) == doctest::Approx(closed[s]).epsilon(1e-9));
    CHECK(oracle::independent(t, 4, 8, 1));
    CHECK(oracle::independent(t, 1, 2, 4));
    CHECK_FALSE(oracle::independent(t, 1, 2, 0));
  }

  TEST_CASE("verify_example passes for small primes") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
      const auto r = verify_example(q);
      CHECK(r.all_pass);
      CHECK(r.support_size == std::uint64_t{q} * q * q * q * (q - 1));
      const double l = std::log2(q) / q;
      CHECK(r.quantities[0].brute_force == doctest::Approx((q - 1.0) / q).epsilon(1e-9));
      CHECK(r.quantities[4].brute_force == doctest::Approx(l).epsilon(1e-9));
      CHECK(r.quantities[5].brute_force == doctest::Approx(l).epsilon(1e-9));
    }
  }

  TEST_CASE("errors") {
    auto code = [](auto&& fn) {
      try {
        fn();
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::InvalidArgument;
    };
    CHECK(code([] { construct_example(4); }) == ErrorCode::NotPrime);
    CHECK(code([] { construct_example(37); }) == ErrorCode::BudgetExceeded);
    CHECK(code([] { construct_example(5, 100); }) == ErrorCode::BudgetExceeded);
    CHECK(code([] { closed_form_quantities(9); }) == ErrorCode::NotPrime);
  }

  TEST_CASE("unconditional extensions") {
    auto formula = [](double q, double l1, double l2, bool ext3) {
      const double l = std::log2(q) / q;
      return (q - 1) / q - (ext3 ? l : 0.0) - (l1 + l2) * l;
    };
    CHECK(gap_unconditional(7, 1, 1, Extension::Ext1) == doctest::Approx(6.0 / 7 - 2 * std::log2(7.0) / 7).epsilon(1e-12));
    CHECK(gap_unconditional(5, 1, 1, Extension::Ext1) < 0);
    CHECK(minimal_refuting_q(1, 1, Extension::Ext1) == 7);
    for (double lam : {0.0, 1.0, 2.5, 10.0})
      for (bool ext3 : {false, true}) {
        std::uint32_t q = 2;
        while (!(formula(q, lam, lam, ext3) > 0)) {
          ++q;
          while (!small_prime(q)) ++q;
        }
        CHECK(minimal_refuting_q(lam, lam, ext3 ? Extension::Ext3 : Extension::Ext1) == q);
      }
    CHECK(minimal_refuting_q(10, 10, Extension::Ext1) == 149);
    CHECK_THROWS_AS(gap_unconditional(7, -1, 0, Extension::Ext1), Error);
  }
}
