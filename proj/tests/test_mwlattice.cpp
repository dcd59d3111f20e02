#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "wcc/errors.hpp"
#include "wcc/mwlattice.hpp"

using namespace wcc;

namespace {

// Oracle: every integer vector in a generous box with the given norm.
std::set<LatticeVector> brute_force(const CaseLattice& c, const Rational& h, long box) {
  std::set<LatticeVector> out;
  int r = c.rank();
  LatticeVector v(r, -box);
  while (true) {
    Rational n = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) n += c.gram()[i][j] * v[i] * v[j];
    if (n == h) out.insert(v);
    int k = 0;
    while (k < r && v[k] == box) v[k++] = -box;
    if (k == r) break;
    ++v[k];
  }
  return out;
}

std::set<LatticeVector> as_set(const std::vector<LatticeVector>& v) { return {v.begin(), v.end()}; }

// Lists in basis coordinates, one representative per {v, -v}.
std::set<LatticeVector> canon(std::initializer_list<LatticeVector> vs) {
  std::set<LatticeVector> out;
  for (auto v : vs) out.insert(canonical_sign(v));
  return out;
}

}  // namespace

TEST_SUITE("mwlattice") {
  TEST_CASE("case data and height audit") {
    for (auto& id : CaseLattice::ids()) {
      CaseLattice c = CaseLattice::get(id);
      CHECK(is_positive_definite(c.gram()));
      for (int k = 0; k < c.rank(); ++k) {
        LatticeVector e(c.rank(), 0);
        e[k] = 1;
        CHECK(c.height_from_psi(e) == c.gram()[k][k]);
      }
    }
    CHECK(CaseLattice::get("I").rank() == 3);
    CHECK(CaseLattice::get("III").gram()[0][1] == Rational(1, 10));
    CHECK_THROWS_AS(CaseLattice::get("V"), PreconditionError);
  }

  TEST_CASE("target heights") {
    CaseLattice one = CaseLattice::get("I");
    CHECK(*target_height(one, 1) == Rational(4, 3));
    CHECK(*target_height(one, 6) == 2);
    CHECK(!target_height(CaseLattice::get("III"), 5));
    CHECK(!target_height(CaseLattice::get("III"), 1));
    CHECK(!target_height(CaseLattice::get("IV"), 4));
  }

  TEST_CASE("enumeration examples") {
    CaseLattice one = CaseLattice::get("I");
    CHECK(as_set(enumerate_norm_vectors(one, Rational(1, 3))) ==
          std::set<LatticeVector>{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {-1, 1, 0}, {1, -1, 0}});
    CHECK(enumerate_norm_vectors(one, Rational(1, 10)).empty());
    CHECK(as_set(enumerate_norm_vectors(CaseLattice::get("II"), Rational(1, 6))) ==
          std::set<LatticeVector>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    CHECK_THROWS_AS(enumerate_norm_vectors(one, 0), PreconditionError);
  }

  TEST_CASE("enumeration matches brute force") {
    for (auto& id : CaseLattice::ids()) {
      CaseLattice c = CaseLattice::get(id);
      for (int t = 1; t <= 6; ++t) {
        auto h = target_height(c, t);
        if (!h) continue;
        CHECK(as_set(enumerate_norm_vectors(c, *h)) == brute_force(c, *h, c.rank() == 3 ? 6 : 9));
      }
    }
  }

  TEST_CASE("enumeration is symmetric") {
    for (auto& id : CaseLattice::ids()) {
      CaseLattice c = CaseLattice::get(id);
      for (auto [n, d] : {std::pair{1, 3}, {1, 2}, {4, 3}, {3, 2}, {5, 6}, {2, 1}, {1, 1}}) {
        auto vs = enumerate_norm_vectors(c, make_rational(n, d));
        CHECK(vs.size() % 2 == 0);
        auto s = as_set(vs);
        for (auto v : vs) {
          for (auto& x : v) x = -x;
          CHECK(s.count(v) == 1);
        }
      }
    }
  }

  TEST_CASE("counting rows") {
    CHECK(classify_and_count(CaseLattice::get("I")) == std::array<int, 6>{3, 4, 4, 1, 1, 1});
    CHECK(classify_and_count(CaseLattice::get("II")) == std::array<int, 6>{1, 2, 2, 0, 1, 0});
    CHECK(classify_and_count(CaseLattice::get("III")) == std::array<int, 6>{0, 2, 0, 1, 0, 0});
    CHECK(classify_and_count(CaseLattice::get("IV")) == std::array<int, 6>{1, 0, 2, 0, 0, 1});
  }

  TEST_CASE("element lists per type") {
    CaseLattice one = CaseLattice::get("I");
    CHECK(as_set(vectors_for_type(one, 1)) == canon({{2, 0, 0}, {0, 2, 0}, {2, -2, 0}}));
    CHECK(as_set(vectors_for_type(one, 2)) == canon({{-1, 2, 1}, {-1, 2, -1}, {2, -1, 1}, {2, -1, -1}}));
    CHECK(as_set(vectors_for_type(one, 3)) == canon({{1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}}));
    CHECK(as_set(vectors_for_type(one, 4)) == canon({{1, 1, 0}}));
    CHECK(as_set(vectors_for_type(one, 5)) == canon({{-1, 1, 0}}));
    CHECK(as_set(vectors_for_type(one, 6)) == canon({{0, 0, 2}}));
    CHECK(one.name({2, 0, 0}) == "[2]P1");

    CaseLattice two = CaseLattice::get("II");
    CHECK(as_set(vectors_for_type(two, 1)) == canon({{2, 2}}));
    CHECK(as_set(vectors_for_type(two, 2)) == canon({{3, 0}, {0, 3}}));
    CHECK(as_set(vectors_for_type(two, 3)) == canon({{1, -2}, {2, -1}}));
    CHECK(as_set(vectors_for_type(two, 5)) == canon({{1, 1}}));

    CaseLattice three = CaseLattice::get("III");
    CHECK(as_set(vectors_for_type(three, 2)) == canon({{2, 1}, {-3, 1}}));
    CHECK(as_set(vectors_for_type(three, 4)) == canon({{1, -2}}));
    CHECK(vectors_for_type(three, 6).empty());

    CaseLattice four = CaseLattice::get("IV");
    CHECK(as_set(vectors_for_type(four, 1)) == canon({{0, 4}}));
    CHECK(as_set(vectors_for_type(four, 3)) == canon({{1, 2}, {1, -2}}));
    CHECK(as_set(vectors_for_type(four, 6)) == canon({{2, 0}}));
  }

  TEST_CASE("psi is additive") {
    for (auto& id : CaseLattice::ids()) {
      CaseLattice c = CaseLattice::get(id);
      for (int k = 0; k < 50; ++k) {
        LatticeVector a(c.rank()), b(c.rank()), s(c.rank());
        for (int i = 0; i < c.rank(); ++i) {
          a[i] = testing::small(-4, 4);
          b[i] = testing::small(-4, 4);
          s[i] = a[i] + b[i];
        }
        auto pa = c.psi(a), pb = c.psi(b), ps = c.psi(s);
        for (size_t f = 0; f < c.fibers().size(); ++f)
          CHECK(ps[f] == (pa[f] + pb[f]) % c.fibers()[f].components());
      }
    }
  }

  TEST_CASE("Smith normal form and basis extension") {
    CHECK(check_basis_extension({1, 0, 0}, {0, 1, 0}));
    CHECK(!check_basis_extension({1, 0, 0}, {2, 0, 0}));
    CHECK(!check_basis_extension({2, 0, 0}, {0, 1, 0}));
    auto d = smith_divisors({{2, 0, 0}, {0, 1, 0}});
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 1);
    CHECK(d[1] == 2);
    CHECK(integer_rank({{1, 2, 3}, {2, 4, 6}}) == 1);
    CHECK(check_basis_extension({-1, 1, 0}, {1, 0, 0}));
    CHECK(smith_divisors({{4, 6}, {6, 4}}) == std::vector<BigInt>{2, 10});
  }
}
