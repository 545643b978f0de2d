#include <doctest.h>

#include <random>

#include "entroscope/catalog.hpp"
#include "entroscope/error.hpp"
#include "entroscope/parser.hpp"
#include "entroscope/profile.hpp"
#include "oracles.hpp"

using namespace entroscope;

namespace {

using oracle::kNames;
using oracle::random_expression;

}  // namespace

TEST_SUITE("expr-lang") {
  TEST_CASE("parse examples") {
    const std::vector<std::string> v{"a", "b", "c"};
    const auto e = parse_expression("I(a;b|c)", v);
    CHECK(print_canonical(e) == "-H(c) + H(a,c) + H(b,c) - H(a,b,c)");
    CHECK(parse_expression("I(a;b) - I(a;b)", v).is_zero());
    CHECK(print_canonical(parse_expression("I(a;b) - I(a;b)", v)) == "0");
    CHECK(parse_expression("2*H(a|b)", v) == parse_expression("2*H(a,b) - 2*H(b)", v));
    CHECK(parse_expression("0.5*H(a)", v) == parse_expression("1/2*H(a)", v));
    CHECK(collect_variables("I(x;y|z) + H(w)") == std::vector<std::string>{"w", "x", "y", "z"});
  }

  TEST_CASE("parse errors") {
    const std::vector<std::string> v{"a", "b", "c"};
    try {
      parse_expression("I(a;b", v);
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.position() == 5);
      CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
    try {
      parse_expression("H(a) + + H(b)", v);
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.position() == 7);
    }
    CHECK_THROWS_AS(parse_expression("H(a) H(b)", v), SyntaxError);
    try {
      parse_expression("H(z)", v);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownVariable);
    }
    try {
      parse_expression("I(a;a)", v);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OverlappingSubsets);
    }
  }

  TEST_CASE("200 random expressions: value oracle and print/parse fixpoint") {
    std::mt19937_64 rng(1234);
    std::vector<double> coords(31);
    std::uniform_real_distribution<double> u(0, 5);
    for (auto& c : coords) c = u(rng);
    const EntropyProfile p(kNames, coords);  // any vector works for linear evaluation
    for (int trial = 0; trial < 200; ++trial) {
      const auto [text, value] = random_expression(rng, p);
      CAPTURE(text);
      const auto e = parse_expression(text, kNames);
      CHECK(evaluate(e, p) == doctest::Approx(value).epsilon(1e-9));
      const std::string printed = print_canonical(e);
      const auto again = parse_expression(printed, kNames);
      CHECK(again == e);
      CHECK(print_canonical(again) == printed);
    }
  }

  TEST_CASE("catalog round trip and classification") {
    const auto& cat = catalog();
    CHECK(cat.families.size() == 6);
    CHECK(cat.basic.size() == 28);
    for (const auto& f : cat.families) {
      CHECK(parse_expression(print_canonical(f.body), f.body.variables()) == f.body);
      for (const auto& c : f.constraints) {
        CHECK(parse_expression(print_canonical(c), c.variables()) == c);
        CHECK(classify(c).has_value());
      }
    }
    for (const auto& b : cat.basic) {
      CHECK(parse_expression(b.label, quadruple_names()) == b.expression);
      CHECK(parse_expression(print_canonical(b.expression), quadruple_names()) == b.expression);
    }
    CHECK_THROWS_AS(find_inequality("cond9"), Error);
    CHECK(find_inequality("matus-star(3)").body == matus_star(3).body);
    const auto i = classify(parse_expression("3*I(a;b|c)", {"a", "b", "c"}));
    REQUIRE(i);
    CHECK(pattern_label(*i, {"a", "b", "c"}) == "I(a;b|c)");
    CHECK_FALSE(classify(parse_expression("H(a) - H(b)", {"a", "b"})).has_value());
  }

  TEST_CASE("elemental family size") {
    for (int n = 1; n <= 5; ++n) {
      std::vector<std::string> v(kNames.begin(), kNames.begin() + n);
      const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
      const std::size_t expected = static_cast<std::size_t>(n) + pairs * (n >= 2 ? (std::size_t{1} << (n - 2)) : 0);
      CHECK(elemental_family(v).size() == expected);
    }
  }
}
