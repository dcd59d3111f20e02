#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "wcc/errors.hpp"
#include "wcc/fixtures.hpp"

using namespace wcc;
using testing::sec;

namespace {

const WorkedExample& example() {
  static WorkedExample ex = load_worked_example();
  return ex;
}

std::vector<Section> section_set() {
  const auto& ex = example();
  const auto& m = ex.model;
  Section p0 = ex.section("P0"), p1 = ex.section("P1"), p2 = ex.section("P2"), p3 = ex.section("P3");
  return {p0, p1, p2, p3, neg(p1), mul(m, 2, p1), add(m, p1, p3), sub(m, p2, p3), mul(m, 2, p3), add(m, p1, p2)};
}

std::vector<std::string> fiber_types(const FiberReport& r) {
  std::vector<std::string> out;
  for (auto& f : r.fibers) out.push_back(f.type_name());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("ellsurface") {
  TEST_CASE("model read from the image quartic") {
    const auto& m = example().model;
    CHECK(m.a2() == parse_poly("(2*t^2 - 3*t)/2"));
    CHECK(m.a4() == parse_poly("t^2 - t^3"));
    CHECK(m.a6() == parse_poly("t^2*(t - 1)^2/8"));
  }

  TEST_CASE("degenerate and unsuitable models are rejected") {
    CHECK_THROWS_AS(WeierstrassModel(Poly(), Poly(), Poly()), PreconditionError);
    CHECK_THROWS_AS(WeierstrassModel(parse_poly("t^3"), Poly(), Poly(1)), PreconditionError);
    // The original quartic is not a monic cubic in x.
    CHECK_THROWS_AS(WeierstrassModel::from_quartic(example().data.curves.at("Q")), PreconditionError);
  }

  TEST_CASE("group law examples") {
    const auto& ex = example();
    const auto& m = ex.model;
    CHECK(add(m, ex.section("P2"), neg(ex.section("P1"))) == ex.section("P0"));
    Section d = mul(m, 2, ex.section("P1"));
    CHECK(d.x() == RatFunc(parse_poly("(2*t + 3)*t/2")));
    CHECK((d.y() == RatFunc(parse_poly("r2*(4*t^2 + 5*t + 1)*t/4")) ||
           d.y() == RatFunc(parse_poly("-r2*(4*t^2 + 5*t + 1)*t/4"))));
    CHECK(mul(m, 2, ex.section("P2")).x() == RatFunc(parse_poly("(2*t - 1)*t/2")));
    CHECK(mul(m, 2, ex.section("P0")).x() == RatFunc(parse_poly("t*(t + 4)/8")));
    for (auto& p : section_set()) {
      CHECK(add(m, p, neg(p)).is_zero());
      CHECK(add(m, p, Section::zero()) == p);
    }
  }

  TEST_CASE("group law is associative and commutative on the section set") {
    const auto& m = example().model;
    auto set = section_set();
    for (size_t a = 0; a < 5; ++a)
      for (size_t b = 0; b < 5; ++b) {
        CHECK(add(m, set[a], set[b]) == add(m, set[b], set[a]));
        for (size_t c = 5; c < set.size(); c += 2)
          CHECK(add(m, add(m, set[a], set[b]), set[c]) == add(m, set[a], add(m, set[b], set[c])));
      }
  }

  TEST_CASE("every section satisfies the Weierstrass equation") {
    const auto& m = example().model;
    for (auto& p : section_set()) {
      CHECK(on_curve(m, p));
      RatFunc lhs = p.y() * p.y();
      CHECK(lhs == m.cubic(p.x()));
    }
    CHECK(!on_curve(m, sec("(t, t)")));
  }

  TEST_CASE("sections and plane curves") {
    const auto& ex = example();
    CHECK(section_to_plane_curve(ex.section("P1")).form().proportional(parse_form("X")));
    CHECK(section_to_plane_curve(mul(ex.model, 2, ex.section("P0"))).form().proportional(parse_form("8*x - t*(t + 4)")));
    auto [sp, sm] = plane_curve_to_sections(ex.model, parse_form("2*x - (2*t + 3)*t"));
    CHECK(sm == neg(sp));
    CHECK((sp == mul(ex.model, 2, ex.section("P1")) || sm == mul(ex.model, 2, ex.section("P1"))));
    CHECK_THROWS_AS(plane_curve_to_sections(ex.model, parse_form("x = t^2 + 1")), PreconditionError);
  }

  TEST_CASE("fibers of the worked example") {
    FiberReport r = classify_fibers(example().model);
    REQUIRE(r.fibers.size() == 4);
    CHECK(r.fibers[0].location == FieldElem(-1));
    CHECK(r.fibers[0].type_name() == "I2");
    CHECK(r.fibers[1].location == FieldElem(0));
    CHECK(r.fibers[1].type_name() == "IV");
    CHECK(r.fibers[2].location == FieldElem(1));
    CHECK(r.fibers[2].type_name() == "I2");
    CHECK(r.fibers[3].at_infinity);
    CHECK(r.fibers[3].type_name() == "I2");
    int euler = r.residual_euler;
    for (auto& f : r.fibers) euler += f.euler();
    CHECK(euler == 12);
    CHECK(r.residual_euler == 2);
  }

  TEST_CASE("fiber types agree with discriminant valuations") {
    const auto& m = example().model;
    Poly delta = m.discriminant(), c4 = m.c4();
    // Oracle: I_n iff c4 does not vanish; IV iff ord(delta) = 4 with c4 vanishing.
    CHECK(delta.ord_at(-1) == 2);
    CHECK(c4.ord_at(-1) == 0);
    CHECK(delta.ord_at(1) == 2);
    CHECK(c4.ord_at(1) == 0);
    CHECK(delta.ord_at(0) == 4);
    CHECK(c4.ord_at(0) > 0);
    CHECK(delta.ord_at(2) == 0);
  }

  TEST_CASE("translated model has the same fiber multiset") {
    const auto& m = example().model;
    CHECK(fiber_types(classify_fibers(m.translated(3))) == fiber_types(classify_fibers(m)));
    CHECK(fiber_types(classify_fibers(m.translated(Rational(-1, 2)))) == fiber_types(classify_fibers(m)));
  }

  TEST_CASE("component indices") {
    const auto& ex = example();
    HeightContext ctx = ex.heights();
    CHECK(ctx.psi(ex.section("P1")) == std::vector<int>{0, 1, 1, 1});
    CHECK(ctx.psi(Section::zero()) == std::vector<int>{0, 0, 0, 0});
    auto p = ctx.psi(ex.section("P1")), d = ctx.psi(mul(ex.model, 2, ex.section("P1")));
    for (size_t k = 0; k < ctx.fibers.size(); ++k) CHECK(d[k] == (2 * p[k]) % ctx.fibers[k].components());
  }

  TEST_CASE("component index is a homomorphism on the section set") {
    const auto& ex = example();
    HeightContext ctx = ex.heights();
    auto set = section_set();
    for (auto& a : set)
      for (auto& b : set) {
        Section s = add(ex.model, a, b);
        if (!s.is_zero() && !s.in_stratum()) continue;
        auto pa = ctx.psi(a), pb = ctx.psi(b), ps = ctx.psi(s);
        for (size_t k = 0; k < ctx.fibers.size(); ++k) {
          int m = ctx.fibers[k].components();
          CHECK(ps[k] == (pa[k] + pb[k]) % m);
        }
      }
  }
}
