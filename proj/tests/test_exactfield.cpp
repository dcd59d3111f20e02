#include "doctest.h"
#include "support.hpp"
#include "wcc/errors.hpp"

using namespace wcc;
using testing::rand_field;

TEST_SUITE("exactfield") {
  TEST_CASE("defining relations") {
    FieldElem r2 = FieldElem::sqrt2(), i = FieldElem::imag();
    CHECK(r2 * r2 == FieldElem(2));
    CHECK((i * r2) * (i * r2) == FieldElem(-2));
    CHECK((FieldElem(1) + r2) * (r2 - FieldElem(1)) == FieldElem(1));
    CHECK(i * i == FieldElem(-1));
  }

  TEST_CASE("inverses") {
    CHECK(FieldElem(2).inv() == FieldElem(Rational(1, 2)));
    CHECK(FieldElem::sqrt2().inv() == parse_field("r2/2"));
    CHECK((FieldElem(1) + FieldElem::imag()).inv() == parse_field("(1 - i)/2"));
    CHECK_THROWS_AS(FieldElem().inv(), DivisionByZero);
  }

  TEST_CASE("rational and real predicates") {
    CHECK(parse_field("3/2").is_rational());
    CHECK(!FieldElem::sqrt2().is_rational());
    CHECK(FieldElem::sqrt2().is_real());
    FieldElem ir2 = parse_field("i*r2");
    CHECK(!ir2.is_rational());
    CHECK(!ir2.is_real());
  }

  TEST_CASE("canonical rationals") {
    FieldElem a(Rational(2, 4));
    CHECK(a[0].get_num() == 1);
    CHECK(a[0].get_den() == 2);
    CHECK(parse_field("6/4 + 2*r2/8") == FieldElem(Rational(3, 2), Rational(1, 4), 0, 0));
  }

  TEST_CASE("literal grammar") {
    CHECK(parse_field("3/4 + 1/2*r2 - i*r2") == FieldElem(Rational(3, 4), Rational(1, 2), 0, -1));
    CHECK(parse_field(FieldElem(Rational(-5, 3), 2, Rational(1, 7), -1).to_string()) ==
          FieldElem(Rational(-5, 3), 2, Rational(1, 7), -1));
  }

  TEST_CASE("field axioms on random elements") {
    for (int k = 0; k < 300; ++k) {
      FieldElem a = rand_field(), b = rand_field(), c = rand_field();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == FieldElem());
      if (!a.is_zero()) {
        CHECK(a * a.inv() == FieldElem(1));
        CHECK(a.norm() != 0);
      }
    }
    CHECK(FieldElem().norm() == 0);
  }

  TEST_CASE("embedding of Q is a ring map") {
    for (int k = 0; k < 100; ++k) {
      Rational p = testing::rand_rational(), q = testing::rand_rational();
      CHECK(FieldElem(p) * FieldElem(q) == FieldElem(p * q));
      CHECK(FieldElem(p) + FieldElem(q) == FieldElem(p + q));
    }
  }

  TEST_CASE("norm is multiplicative and the product of the conjugates") {
    for (int k = 0; k < 100; ++k) {
      FieldElem a = rand_field(), b = rand_field();
      CHECK((a * b).norm() == a.norm() * b.norm());
      FieldElem prod = a * a.conj_sqrt2() * a.conj_i() * a.conj_sqrt2().conj_i();
      CHECK(prod == FieldElem(a.norm()));
    }
  }
}
