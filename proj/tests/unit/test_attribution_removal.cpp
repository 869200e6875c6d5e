#include <doctest.h>

#include <cmath>

#include "qbafx/attribution.hpp"
#include "qbafx/errors.hpp"
#include "qbafx/qbaf.hpp"
#include "support/fixtures.hpp"
#include "support/reference_tables.hpp"

using namespace qbafx;

namespace {
const SolverConfig kCfg;  // defaults: tolerance 1e-12, cap 10000
}

TEST_CASE("removal AAEs on the case study match the frozen oracle") {
  const Qbaf q = testsupport::case_study();
  for (std::size_t i = 0; i < testsupport::kFrozenAaeCount; ++i) {
    const auto& row = testsupport::kFrozenAae[i];
    const double got = removal_aae(q, kCfg, "c5", row.id);
    CHECK_MESSAGE(std::abs(got - row.value) <= 1e-9, "AAE of ", row.id,
                  ": got ", got, ", frozen ", row.value);
  }
}

TEST_CASE("removal RAEs on the case study match the frozen oracle") {
  const Qbaf q = testsupport::case_study();
  for (std::size_t i = 0; i < testsupport::kFrozenRaeCount; ++i) {
    const auto& row = testsupport::kFrozenRae[i];
    const double got = removal_rae(q, kCfg, "c5", {row.src, row.dst});
    CHECK_MESSAGE(std::abs(got - row.value) <= 1e-9, "RAE of (", row.src,
                  ",", row.dst, "): got ", got, ", frozen ", row.value);
  }
}

TEST_CASE("inert arguments attribute exactly zero") {
  // c3, c4 and s6 sit on a branch whose strengths are pinned at 0, so
  // removing any of them cannot move the topic.
  const Qbaf q = testsupport::case_study();
  CHECK(removal_aae(q, kCfg, "c5", "s6") == 0.0);
  CHECK(removal_aae(q, kCfg, "c5", "c3") == 0.0);
  CHECK(removal_aae(q, kCfg, "c5", "c4") == 0.0);
}

TEST_CASE("an argument in a disjoint component attributes exactly zero") {
  const Qbaf q = build_qbaf(
      {"a", "b", "u", "v"}, {{"u", "v"}}, {{"b", "a"}},
      {{"a", 0.4}, {"b", 0.9}, {"u", 0.3}, {"v", 0.8}});
  CHECK(removal_aae(q, kCfg, "a", "u") == 0.0);
  CHECK(removal_aae(q, kCfg, "a", "v") == 0.0);
  CHECK(removal_rae(q, kCfg, "a", {"u", "v"}) == 0.0);
}

TEST_CASE("removal attribution validates its arguments") {
  const Qbaf q = testsupport::figure2();
  CHECK_THROWS_AS(removal_aae(q, kCfg, "alpha", "alpha"), Error);
  try {
    removal_aae(q, kCfg, "alpha", "alpha");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TopicEqualsTarget);
  }
  try {
    removal_aae(q, kCfg, "alpha", "zz");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownArgument);
  }
  try {
    removal_rae(q, kCfg, "alpha", {"alpha", "beta"});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownEdge);
  }
}

TEST_CASE("explain_all(removal, arguments) is sorted and complete") {
  const Qbaf q = testsupport::case_study();
  const AttributionReport report = explain_all(
      q, kCfg, "c5", TargetKind::Argument, AttributionMethod::Removal);
  CHECK(report.topic == "c5");
  CHECK(report.method == AttributionMethod::Removal);
  CHECK(report.kind == TargetKind::Argument);
  CHECK_FALSE(report.sample_size.has_value());
  CHECK_FALSE(report.seed.has_value());
  REQUIRE(report.entries.size() == 16);  // every argument except the topic

  // Descending by value; ties broken by natural target order.
  for (std::size_t i = 1; i < report.entries.size(); ++i) {
    const auto& prev = report.entries[i - 1];
    const auto& cur = report.entries[i];
    const bool ordered =
        prev.value > cur.value ||
        (prev.value == cur.value && target_less(prev.target, cur.target));
    CHECK_MESSAGE(ordered, "entries ", i - 1, " and ", i);
  }

  // Spot-check the extremes against the frozen oracle.
  CHECK(report.entries.front().target.argument == "s7");
  CHECK(report.entries.front().value ==
        doctest::Approx(0.084880341483560495).epsilon(1e-9));
  CHECK(report.entries.back().target.argument == "c0");
  CHECK(report.entries.back().value ==
        doctest::Approx(-0.0024516370975753432).epsilon(1e-9));
}

TEST_CASE("explain_all(removal, relations) covers every edge once") {
  const Qbaf q = testsupport::case_study();
  const AttributionReport report = explain_all(
      q, kCfg, "c5", TargetKind::Edge, AttributionMethod::Removal);
  REQUIRE(report.entries.size() == 34);
  CHECK(report.entries.front().target.edge == EdgeKey{"s7", "c5"});
  CHECK(report.entries.front().value ==
        doctest::Approx(0.084880341483559829).epsilon(1e-9));
  CHECK(report.entries.back().target.edge == EdgeKey{"c0", "c1"});
}

TEST_CASE("symmetric sources attribute bit-identically") {
  const Qbaf q = testsupport::case_study();
  const double s8 = removal_aae(q, kCfg, "c5", "s8");
  const double s9 = removal_aae(q, kCfg, "c5", "s9");
  const double s10 = removal_aae(q, kCfg, "c5", "s10");
  CHECK(s8 == s9);
  CHECK(s9 == s10);
}
