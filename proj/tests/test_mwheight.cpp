#include "doctest.h"
#include "support.hpp"
#include "wcc/errors.hpp"
#include "wcc/fixtures.hpp"
#include "wcc/mwheight.hpp"

using namespace wcc;

namespace {

const WorkedExample& example() {
  static WorkedExample ex = load_worked_example();
  return ex;
}

const HeightContext& ctx() {
  static HeightContext c = example().heights();
  return c;
}

Section S(const char* n) { return example().section(n); }

// Small combinations of the basis that stay on the line/conic stratum.
std::vector<Section> stratum_set() {
  const auto& m = example().model;
  std::vector<Section> out;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c) {
        Section s = add(m, add(m, mul(m, a, S("P1")), mul(m, b, S("P2"))), mul(m, c, S("P3")));
        if (s.in_stratum()) out.push_back(s);
      }
  return out;
}

}  // namespace

TEST_SUITE("mwheight") {
  TEST_CASE("contribution table") {
    CHECK(contribution(Kodaira::In, 3, 1, 1) == Rational(2, 3));
    CHECK(contribution(Kodaira::In, 3, 1, 2) == Rational(1, 3));
    CHECK(contribution(Kodaira::In, 5, 2, 3) == Rational(4, 5));
    CHECK(contribution(Kodaira::In, 2, 1, 1) == Rational(1, 2));
    CHECK(contribution(Kodaira::In, 4, 0, 3) == 0);
    CHECK(contribution(Kodaira::III, 0, 1, 1) == Rational(1, 2));
    CHECK(contribution(Kodaira::IV, 0, 1, 1) == Rational(2, 3));
    CHECK(contribution(Kodaira::IV, 0, 2, 2) == Rational(2, 3));
    CHECK(contribution(Kodaira::IV, 0, 1, 2) == Rational(1, 3));
    CHECK(contribution(Kodaira::II, 0, 0, 0) == 0);
  }

  TEST_CASE("section intersections") {
    CHECK(section_zero_intersection(S("P1")) == 0);
    CHECK_THROWS_AS(section_intersection(ctx(), S("P1"), S("P1")), PreconditionError);
    // <P1, P2> = 1 - (P1.P2) - contributions = 1/6 forces (P1.P2) = 0 here.
    CHECK(section_intersection(ctx(), S("P1"), S("P2")) == 0);
  }

  TEST_CASE("heights of the worked example") {
    CHECK(height(ctx(), S("P1"), S("P1")) == Rational(1, 3));
    CHECK(height(ctx(), S("P3"), S("P3")) == Rational(1, 2));
    CHECK(height(ctx(), S("P1"), S("P2")) == Rational(1, 6));
    CHECK(height(ctx(), Section::zero(), Section::zero()) == 0);
    Section d = mul(example().model, 2, S("P1"));
    CHECK(height(ctx(), d, d) == Rational(4, 3));
  }

  TEST_CASE("Gram matrices") {
    RatMatrix g = gram_matrix(ctx(), {S("P1"), S("P2"), S("P3")});
    RatMatrix want = {{Rational(1, 3), Rational(1, 6), 0}, {Rational(1, 6), Rational(1, 3), 0}, {0, 0, Rational(1, 2)}};
    CHECK(g == want);
    CHECK(is_positive_definite(g));
    CHECK(determinant(g) == Rational(1, 24));
    CHECK(gram_matrix(ctx(), {S("P1")}) == RatMatrix{{Rational(1, 3)}});
    CHECK(gram_matrix(ctx(), {}).empty());
    CHECK_THROWS_AS(gram_matrix(ctx(), {S("P1"), S("P1")}), IntegrityError);
  }

  TEST_CASE("height is bilinear") {
    const auto& m = example().model;
    auto set = stratum_set();
    REQUIRE(set.size() > 20);
    int checked = 0;
    for (size_t a = 0; a < set.size(); a += 3)
      for (size_t b = 1; b < set.size(); b += 4) {
        Section s = add(m, set[a], set[b]);
        if (!s.in_stratum()) continue;
        for (const char* r : {"P1", "P3", "P0"}) {
          CHECK(height(ctx(), s, S(r)) == height(ctx(), set[a], S(r)) + height(ctx(), set[b], S(r)));
          ++checked;
        }
      }
    CHECK(checked > 30);
  }

  TEST_CASE("height scales quadratically") {
    const auto& m = example().model;
    for (const char* n : {"P0", "P1", "P2", "P3"}) {
      Rational h = height(ctx(), S(n), S(n));
      for (long k = -2; k <= 2; ++k) {
        Section s = mul(m, k, S(n));
        CHECK(height(ctx(), s, s) == k * k * h);
      }
    }
  }

  TEST_CASE("height is symmetric and agrees with the fiber formula") {
    auto set = stratum_set();
    for (size_t a = 0; a < set.size(); a += 5)
      for (size_t b = 0; b < set.size(); b += 7) CHECK(height(ctx(), set[a], set[b]) == height(ctx(), set[b], set[a]));
  }
}
