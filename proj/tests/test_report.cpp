#include <doctest.h>

#include <json.hpp>

#include "test_util.hpp"
#include "torusbook/report.hpp"

using namespace torusbook;

TEST_CASE("report fields are reproducible from the library") {
  TwistWord word = parse_word("d x y^-1");
  Report r = build_report(word, "d x y^-1");
  CHECK(r.canonical == normalize(word));
  CHECK(r.trace == rep_of_word(word).trace());
  CHECK(r.expsum == exponent_sum(word));
  CHECK(r.verdict.status == TightnessStatus::Tight);
  CHECK(r.dynamics == DynamicsClass::PseudoAnosov);
  CHECK(r.lspace == LSpaceStatus::NotLSpace);
  CHECK_FALSE(r.hopf.has_value());
  CHECK(r.h1_order == 1);
}

TEST_CASE("hopf invariant appears for type B with d = 0") {
  Report r = build_report(parse_word("w x y^-9"), "w x y^-9");
  REQUIRE(r.hopf.has_value());
  CHECK(*r.hopf == Rational(1));
}

TEST_CASE("json output is byte-stable and round-trips") {
  std::vector<std::string> inputs = {"d x y^-1", "y^-4", "", "w x y^-1 x^4",
                                     "x^3 y^2",  "w",    "d^-2 x y"};
  for (const std::string& text : inputs) {
    TwistWord word = parse_word(text);
    Report r = build_report(word, text);
    std::string json_a = report_to_json(r);
    std::string json_b = report_to_json(build_report(word, text));
    CHECK(json_a == json_b);
    CHECK(report_to_text(r) == report_to_text(r));

    // Re-parsing the reported canonical word and re-classifying gives the
    // same report apart from the verbatim input field.
    auto parsed = nlohmann::json::parse(json_a);
    std::string canonical_word = parsed["canonical"]["word"].get<std::string>();
    Report again = build_report(parse_word(canonical_word), canonical_word);
    auto reparsed = nlohmann::json::parse(report_to_json(again));
    for (const char* key : {"canonical", "dynamics", "verdict", "certificate", "invariants"}) {
      CHECK(parsed[key] == reparsed[key]);
    }
    CHECK(parsed["dehn"]["tight_minus_dehn"] == reparsed["dehn"]["tight_minus_dehn"]);
  }
}

TEST_CASE("json schema keys") {
  Report r = build_report(parse_word("w x y^-7"), "w x y^-7");
  auto j = nlohmann::json::parse(report_to_json(r));
  for (const char* key :
       {"word", "canonical", "dynamics", "verdict", "certificate", "invariants", "dehn"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["verdict"] == "tight");
  CHECK(j["invariants"]["hopf"] == "1/2");
  CHECK(j["dehn"]["obstructed"] == true);
  CHECK(j["dehn"]["tight_minus_dehn"] == true);
  CHECK(j["certificate"]["kind"] == "invariant-chain");
}
