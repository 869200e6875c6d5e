#include <doctest.h>

#include "qbafx/errors.hpp"
#include "qbafx/json_io.hpp"
#include "qbafx/qbaf.hpp"
#include "support/fixtures.hpp"

using namespace qbafx;

TEST_CASE("parsing the running-example fixture") {
  const Qbaf q = parse_qbaf_json(testsupport::read_fixture("figure2_qbaf.json"));
  CHECK(q == testsupport::figure2());
}

TEST_CASE("serialize then parse is the identity") {
  const Qbaf q = testsupport::figure2();
  CHECK(parse_qbaf_json(serialize_qbaf_json(q)) == q);
  const Qbaf cs = testsupport::case_study();
  CHECK(parse_qbaf_json(serialize_qbaf_json(cs)) == cs);
}

TEST_CASE("serialization is canonical and deterministic") {
  const Qbaf q = build_qbaf({"b", "a"}, {{"b", "a"}}, {},
                            {{"a", 0.25}, {"b", 1.0}});
  const std::string want = R"({
  "arguments": [
    {
      "id": "a",
      "base_score": 0.25
    },
    {
      "id": "b",
      "base_score": 1.0
    }
  ],
  "attacks": [
    [
      "b",
      "a"
    ]
  ],
  "supports": []
}
)";
  CHECK(serialize_qbaf_json(q) == want);
  CHECK(serialize_qbaf_json(q) == serialize_qbaf_json(q));
}

TEST_CASE("malformed JSON raises ParseError") {
  CHECK_THROWS_AS(parse_qbaf_json("{"), qbafx::ParseError);
  CHECK_THROWS_AS(parse_qbaf_json(""), qbafx::ParseError);
  CHECK_THROWS_AS(parse_qbaf_json("[]"), qbafx::ParseError);
}

TEST_CASE("missing and unknown fields are rejected") {
  CHECK_THROWS_AS(parse_qbaf_json(R"({"arguments": []})"), qbafx::ParseError);
  CHECK_THROWS_AS(
      parse_qbaf_json(
          R"({"arguments": [], "attacks": [], "supports": [], "x": 1})"),
      qbafx::ParseError);
  CHECK_THROWS_AS(
      parse_qbaf_json(
          R"({"arguments": [{"id": "a"}], "attacks": [], "supports": []})"),
      qbafx::ParseError);
  CHECK_THROWS_AS(
      parse_qbaf_json(
          R"({"arguments": [{"id": "a", "base_score": 0.5, "tau": 1}],
              "attacks": [], "supports": []})"),
      qbafx::ParseError);
}

TEST_CASE("type errors in edges are rejected") {
  CHECK_THROWS_AS(
      parse_qbaf_json(
          R"({"arguments": [{"id": "a", "base_score": 0.5}],
              "attacks": [["a"]], "supports": []})"),
      qbafx::ParseError);
  CHECK_THROWS_AS(
      parse_qbaf_json(
          R"({"arguments": [{"id": "a", "base_score": 0.5}],
              "attacks": [[1, 2]], "supports": []})"),
      qbafx::ParseError);
}

TEST_CASE("semantic errors surface with their own codes") {
  try {
    parse_qbaf_json(
        R"({"arguments": [{"id": "a", "base_score": 2.0}],
            "attacks": [], "supports": []})");
    FAIL("expected BadBaseScore");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadBaseScore);
  }
  try {
    parse_qbaf_json(
        R"({"arguments": [{"id": "a", "base_score": 0.5}],
            "attacks": [["a", "zz"]], "supports": []})");
    FAIL("expected UnknownEndpoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownEndpoint);
  }
}

TEST_CASE("parse errors carry a line number for syntax failures") {
  try {
    parse_qbaf_json("{\n  \"arguments\": [\n  oops\n");
    FAIL("expected ParseError");
  } catch (const qbafx::ParseError& e) {
    CHECK(e.line() >= 1);
  }
}

TEST_CASE("base scores round-trip at full precision") {
  const double tau = 0.1234567890123456789;  // not representable exactly
  const Qbaf q = build_qbaf({"a"}, {}, {}, {{"a", tau}});
  const Qbaf back = parse_qbaf_json(serialize_qbaf_json(q));
  CHECK(back.base_score("a") == q.base_score("a"));
}
