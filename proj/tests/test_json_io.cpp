#include <doctest.h>

#include "entroscope/error.hpp"
#include "entroscope/json_io.hpp"
#include "entroscope/parser.hpp"

using namespace entroscope;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

const char* kCoins = R"({"variables":[{"name":"x","alphabet":2},{"name":"y","alphabet":2}],
 "outcomes":[{"values":[0,0],"p":"1/4"},{"values":[0,1],"p":"1/4"},{"values":[1,0],"p":"1/4"},{"values":[1,1],"p":"1/4"}]})";

}  // namespace

TEST_SUITE("json-io") {
  TEST_CASE("distribution fixpoint and strictness") {
    const auto d = distribution_from_json(kCoins);
    CHECK(d.support_size() == 4);
    const std::string once = distribution_to_json(d);
    CHECK(distribution_to_json(distribution_from_json(once)) == once);
    const auto ex = construct_example(3);
    const std::string text = distribution_to_json(ex);
    CHECK(distribution_from_json(text) == ex);
    const std::string wrapped = "{\"report\": {}, \"distribution\": " + text + "}";
    CHECK(distribution_from_json(wrapped) == ex);

    std::string with_float = kCoins;
    with_float.replace(with_float.find("\"1/4\""), 5, "0.25");
    try {
      distribution_from_json(with_float);
      FAIL("floats must be rejected");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::FormatError);
      CHECK(std::string(e.what()).find("exact rational required") != std::string::npos);
    }
    std::string decimal = kCoins;
    decimal.replace(decimal.find("\"1/4\""), 5, "\"0.25\"");
    CHECK(code_of([&] { distribution_from_json(decimal); }) == ErrorCode::FormatError);
    std::string short_sum = kCoins;
    short_sum.replace(short_sum.find("\"1/4\""), 5, "\"1/8\"");
    CHECK(code_of([&] { distribution_from_json(short_sum); }) == ErrorCode::SumNotOne);
    CHECK(code_of([] { distribution_from_json("{"); }) == ErrorCode::FormatError);
    CHECK(code_of([] { distribution_from_json("{\"variables\":[]}"); }) == ErrorCode::FormatError);
  }

  TEST_CASE("profile fixpoint") {
    const auto p = profile_of(construct_example(3));
    const std::string once = profile_to_json(p);
    CHECK(once.find("\"abcd\"") != std::string::npos);
    const auto back = profile_from_json(once);
    CHECK(back.coords() == p.coords());
    CHECK(profile_to_json(back) == once);
    const std::string report = profile_report_to_json(p, is_polymatroid(p));
    CHECK(profile_from_json(report).coords() == p.coords());
    const auto named = EntropyProfile({"xa", "y"}, {1, 1, 2});
    CHECK(profile_to_json(named).find("\"xa,y\"") != std::string::npos);
    CHECK(profile_from_json(profile_to_json(named)).coords() == named.coords());
  }

  TEST_CASE("shannon verdicts round trip") {
    for (const char* text : {"I(a;b|c)", "2*I(c;d|a) + I(c;d|b) + I(a;b) + I(a;c|d) + I(a;d|c) - I(c;d)"}) {
      const auto e = parse_expression(text);
      const auto v = is_shannon_type(e);
      const std::string once = shannon_to_json(v, e);
      InfoExpression back_e;
      const auto back = shannon_from_json(once, &back_e);
      CHECK(back_e == e);
      CHECK(verify_certificate(back, back_e));
      CHECK(shannon_to_json(back, back_e) == once);
    }
  }

  TEST_CASE("certificates round trip and re-verify") {
    for (AeTarget t : {AeTarget::Cond1, AeTarget::Cond3, AeTarget::Both}) {
      const auto c = minimal_certifying_q(t);
      const std::string once = certificate_to_json(c);
      const auto back = certificate_from_json(once);
      CHECK(reverify(back));
      CHECK(certificate_to_json(back) == once);
    }
  }

  TEST_CASE("reports and verdicts round trip") {
    const std::string report = example_report_to_json(verify_example(3));
    CHECK(example_report_to_json(example_report_from_json(report)) == report);
    const auto d = construct_example(3);
    for (const char* name : {"zy98", "cond1", "cond3", "matus-star(2)"}) {
      const std::string once = verdict_to_json(check_conditional(find_inequality(name), d));
      CHECK(verdict_to_json(verdict_from_json(once)) == once);
    }
  }
}
