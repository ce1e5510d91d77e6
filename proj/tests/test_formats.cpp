#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zcohom/formats.hpp"

using namespace zcohom;

namespace {

const char* kTrivialMonoid = R"({
  "elements": ["1", "0"],
  "identity": "1",
  "zero": "0",
  "table": [["1", "0"], ["0", "0"]]
})";

}  // namespace

TEST_CASE("monoid documents round-trip through validation") {
  MonoidWithZero m = monoid_from_document(parse_monoid_document(kTrivialMonoid));
  CHECK(m.size() == 2);
  CHECK(m.name_of(m.identity) == "1");
  CHECK(m.name_of(m.zero) == "0");
}

TEST_CASE("malformed JSON reports a position") {
  try {
    parse_monoid_document("{\"elements\": [");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("monoid document") != std::string::npos);
  }
}

TEST_CASE("a missing table row is a parse error naming the problem") {
  const char* doc = R"({
    "elements": ["1", "0"],
    "identity": "1",
    "zero": "0",
    "table": [["1", "0"]]
  })";
  CHECK_THROWS_AS(parse_monoid_document(doc), ParseError);
}

TEST_CASE("unknown element names in the table are located") {
  const char* doc = R"({
    "elements": ["1", "0"],
    "identity": "1",
    "zero": "0",
    "table": [["1", "0"], ["0", "oops"]]
  })";
  try {
    monoid_from_document(parse_monoid_document(doc));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("table[1][1]") != std::string::npos);
  }
}

TEST_CASE("an invalid table parses but fails validation with a witness") {
  const char* doc = R"({
    "elements": ["1", "a", "0"],
    "identity": "1",
    "zero": "0",
    "table": [["1", "a", "0"], ["a", "1", "0"], ["0", "a", "0"]]
  })";
  CHECK_THROWS_AS(monoid_from_document(parse_monoid_document(doc)), BadZero);
}

TEST_CASE("coefficient documents resolve to checked systems") {
  MonoidWithZero m = builtin_monoid("example-uvw");

  NaturalSystem d = coefficient_from_json(R"({"kind": "trivial-Z"})", m);
  CHECK(d.label == "trivial-Z");

  NaturalSystem b = coefficient_from_json(R"({"kind": "bar", "degree": 1})", m);
  CHECK(b.label == "bar:1");

  NaturalSystem z = coefficient_from_json(R"({
    "kind": "zero-module",
    "group": {"free_rank": 0, "invariant_factors": [2]},
    "action": {"u": [[1]], "v": [[1]], "w": [[1]]}
  })", m);
  CHECK(z.at(1).rank == 1);
  CHECK(check_functoriality(m, z).empty());
}

TEST_CASE("a zero-module document with a broken action law is rejected") {
  MonoidWithZero m = builtin_monoid("example-uvw");
  CHECK_THROWS_AS(coefficient_from_json(R"({
    "kind": "zero-module",
    "group": {"free_rank": 0, "invariant_factors": [2]},
    "action": {"u": [[1]], "v": [[1]], "w": [[0]]}
  })", m), ParseError);
}

TEST_CASE("natural-system documents are parsed and functoriality-checked") {
  MonoidWithZero m = builtin_monoid("trivial");
  const char* good = R"({
    "kind": "natural-system",
    "objects": {"1": {"free_rank": 1, "invariant_factors": []}},
    "left":  [{"alpha": "1", "object": "1", "matrix": [[1]]}],
    "right": [{"object": "1", "beta": "1", "matrix": [[1]]}]
  })";
  NaturalSystem d = coefficient_from_json(good, m);
  CHECK(d.at(m.identity).rank == 1);

  const char* broken = R"({
    "kind": "natural-system",
    "objects": {"1": {"free_rank": 1, "invariant_factors": []}},
    "left":  [{"alpha": "1", "object": "1", "matrix": [[2]]}],
    "right": [{"object": "1", "beta": "1", "matrix": [[1]]}]
  })";
  CHECK_THROWS_AS(coefficient_from_json(broken, m), ParseError);
}

TEST_CASE("integers beyond 64 bits travel as strings") {
  MonoidWithZero m = builtin_monoid("trivial");
  const char* doc = R"({
    "kind": "zero-module",
    "group": {"rank": 1, "relations": [["36893488147419103232"]]},
    "action": {"1": [[1]]}
  })";
  NaturalSystem d = coefficient_from_json(doc, m);
  CHECK(d.at(m.identity).relations(0, 0) == Int("36893488147419103232"));
}

TEST_CASE("builtin coefficient names resolve against a monoid") {
  MonoidWithZero m = builtin_monoid("example-uvw");
  CHECK(resolve_coefficient("trivial-Z", m).label == "trivial-Z");
  CHECK(resolve_coefficient("bar:0", m).label == "bar:0");
  CHECK(resolve_coefficient("zero-module:z2:identity", m).label == "zero-module:z2:identity");
  CHECK(resolve_coefficient("zero-module:z3:#2", m).label == "zero-module:z3:#2");
  CHECK_THROWS_AS(resolve_coefficient("zero-module:z2:#7", m), ParseError);
  CHECK_THROWS_AS(resolve_coefficient("no-such-thing", m), ParseError);
}

TEST_CASE("builtin monoid names resolve, unknown names explain themselves") {
  CHECK(resolve_monoid("m3").size() == 4);
  try {
    resolve_monoid("not-a-monoid");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("m3") != std::string::npos);
  }
}

TEST_CASE("report rendering is deterministic") {
  MonoidWithZero m = builtin_monoid("example-uvw");
  auto once = render_nerve_report(m, "example-uvw", 3, ReportFormat::text);
  auto twice = render_nerve_report(m, "example-uvw", 3, ReportFormat::text);
  CHECK(once == twice);
  CHECK(once.find("|Ner_2| = 11") != std::string::npos);

  std::vector<AbelianInvariants> groups{AbelianInvariants{1, {}}, AbelianInvariants{},
                                        AbelianInvariants{0, {Int(2)}}};
  auto text = render_cohomology_report(m, "example-uvw", "trivial-Z", 2, groups,
                                       ReportFormat::text);
  CHECK(text.find("H^2 = Z/2") != std::string::npos);
  auto json_report = render_cohomology_report(m, "example-uvw", "trivial-Z", 2, groups,
                                              ReportFormat::json);
  CHECK(json_report.find("\"command\": \"cohomology\"") != std::string::npos);
  CHECK(json_report ==
        render_cohomology_report(m, "example-uvw", "trivial-Z", 2, groups, ReportFormat::json));
}

TEST_CASE("cancellativity reports show the witness equation") {
  MonoidWithZero m = builtin_monoid("example-uvw");
  auto report = render_cancellativity_report(m, "example-uvw", is_zero_cancellative(m),
                                             ReportFormat::text);
  CHECK(report.find("not 0-cancellative") != std::string::npos);
  CHECK(report.find("u·u = v·u") != std::string::npos);
}
