#include "doctest.h"
#include "wcc/errors.hpp"
#include "wcc/fixtures.hpp"
#include "wcc/parse.hpp"

using namespace wcc;

namespace {

std::string replace_line(std::string text, const std::string& from, const std::string& to) {
  auto p = text.find(from);
  REQUIRE(p != std::string::npos);
  return text.replace(p, from.size(), to);
}

}  // namespace

TEST_SUITE("fixtures") {
  TEST_CASE("the shipped example loads and verifies") {
    WorkedExample ex = load_worked_example();
    CHECK(ex.identities.size() > 20);
    CHECK(ex.identities.front() == "the triangle lines are not concurrent");
    CHECK(ex.singular.size() == 3);
    bool cusp = false;
    for (auto& s : ex.singular)
      if (s.kind == SingularityKind::Cusp) cusp = s.point == PlanePoint(Vec3{0, 0, 1});
    CHECK(cusp);
    CHECK(ex.curve("C1").form().proportional(parse_form("2*x - (2*t + 3)*t")));
    CHECK(ex.arrangement("D0").size() == 3);
    CHECK_THROWS_AS(ex.curve("nope"), PreconditionError);
    CHECK_THROWS_AS(ex.section("nope"), PreconditionError);
  }

  TEST_CASE("loading twice gives equal objects") {
    CHECK(load_worked_example() == load_worked_example());
    CHECK(parse_fixture(worked_example_text()) == parse_fixture(worked_example_text()));
  }

  TEST_CASE("a tampered conic is reported by name") {
    std::string bad = replace_line(worked_example_text(), "curve C1: 2*x - (2*t + 3)*t", "curve C1: 2*x - (2*t + 5)*t");
    try {
      load_worked_example_from_text(bad);
      FAIL("tampered fixture accepted");
    } catch (const IntegrityError& e) {
      CHECK(std::string(e.what()).find("C1 is the curve of [2]P1") != std::string::npos);
    }
  }

  TEST_CASE("a tampered quartic breaks the first dependent identity") {
    std::string bad = replace_line(worked_example_text(), "curve CQ: 2*T*X + T*Z - X*Z", "curve CQ: 2*T*X + T*Z + X*Z");
    try {
      load_worked_example_from_text(bad);
      FAIL("tampered fixture accepted");
    } catch (const IntegrityError& e) {
      CHECK(std::string(e.what()).find("quadratic transform of L equals CQ") != std::string::npos);
    }
  }

  TEST_CASE("parse errors carry the line number") {
    CHECK_THROWS_WITH_AS(parse_fixture("curve A: x\nthis line has no colon\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_fixture("curve A: x +* t\n"), ParseError);
    CHECK_THROWS_AS(parse_fixture("widget A: x\n"), ParseError);
    CHECK_THROWS_AS(parse_fixture("arrangement A: x + + t\n"), ParseError);
    CHECK_THROWS_AS(parse_fixture("point p: [1, 2]\n"), ParseError);
    CHECK_THROWS_AS(read_fixture_file("/nonexistent/fixture.txt"), PreconditionError);
  }

  TEST_CASE("fixture grammar") {
    FixtureData d = parse_fixture("# comment\nA: x - t  # trailing\nsection s: (t, 0)\nsection o: O\narrangement r: A + A\n");
    CHECK(d.curves.count("A") == 1);
    CHECK(d.sections.at("o").is_zero());
    CHECK(d.arrangements.at("r") == std::vector<std::string>{"A", "A"});
    FixtureData e;
    e.merge(d);
    CHECK(e == d);
  }
}
