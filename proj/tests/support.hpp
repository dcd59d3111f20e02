#pragma once

#include <random>

#include "wcc/ellsurface.hpp"
#include "wcc/forms.hpp"
#include "wcc/parse.hpp"

namespace testing {

using namespace wcc;

inline std::mt19937& rng() {
  static std::mt19937 g(20240611);
  return g;
}

inline long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational rand_rational() {
  Rational q(small(-9, 9), small(1, 5));
  q.canonicalize();
  return q;
}

inline FieldElem rand_field(bool rational_only = false) {
  if (rational_only) return FieldElem(rand_rational());
  return FieldElem(rand_rational(), rand_rational(), small(0, 2) ? Rational(0) : rand_rational(),
                   small(0, 2) ? Rational(0) : rand_rational());
}

inline Poly rand_poly(int deg, bool rational_only = true) {
  std::vector<FieldElem> c;
  for (int k = 0; k <= deg; ++k) c.push_back(rand_field(rational_only));
  if (c.back().is_zero()) c.back() = 1;
  return Poly(c);
}

inline BiPoly rand_bipoly(int deg_x, int deg_t) {
  std::vector<Poly> c;
  for (int k = 0; k <= deg_x; ++k) c.push_back(rand_poly(deg_t));
  return BiPoly(c);
}

inline Section sec(const char* s) {
  auto [x, y] = parse_pair(s);
  return Section(x, y);
}

}  // namespace testing
