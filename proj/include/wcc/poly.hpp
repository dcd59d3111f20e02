#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wcc/exactfield.hpp"

namespace wcc {

// Dense univariate polynomial over K, coefficients indexed by degree.
class Poly {
 public:
  Poly() = default;
  Poly(const FieldElem& c);  // NOLINT
  Poly(long c);              // NOLINT
  explicit Poly(std::vector<FieldElem> coeffs);

  static Poly monomial(const FieldElem& c, int deg);
  static Poly var() { return monomial(1, 1); }
  // t - v
  static Poly linear_root(const FieldElem& v);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  FieldElem coeff(int k) const;
  FieldElem lc() const { return c_.empty() ? FieldElem() : c_.back(); }
  const std::vector<FieldElem>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  Poly& operator*=(const Poly& b);
  Poly& operator*=(const FieldElem& b);

  bool operator==(const Poly& b) const { return c_ == b.c_; }

  FieldElem eval(const FieldElem& v) const;
  Poly derivative() const;
  Poly monic() const;
  // p(t + v)
  Poly shift(const FieldElem& v) const;
  // p(t) mod t^n
  Poly truncate(int n) const;
  // t^deg * p(1/t) for a chosen nominal degree >= degree()
  Poly reverse(int deg) const;
  // order of vanishing at t = v; throws on the zero polynomial
  int ord_at(const FieldElem& v) const;
  int ord0() const;
  Poly compose(const Poly& inner) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<FieldElem> c_;
};

inline Poly operator+(Poly a, const Poly& b) { return a += b; }
inline Poly operator-(Poly a, const Poly& b) { return a -= b; }
inline Poly operator*(Poly a, const Poly& b) { return a *= b; }
inline Poly operator*(Poly a, const FieldElem& b) { return a *= b; }
inline Poly operator*(const FieldElem& b, Poly a) { return a *= b; }

Poly pow(const Poly& p, int e);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact quotient, throws otherwise
Poly operator%(const Poly& a, const Poly& b);

Poly gcd(const Poly& a, const Poly& b);
// Returns (g, s, u) with s*a + u*b = g monic.
std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);
// Inverse of a modulo m; throws when they share a factor.
Poly inverse_mod(const Poly& a, const Poly& m);

struct SqfFactor {
  Poly factor;
  int multiplicity;
};
std::vector<SqfFactor> squarefree_decomposition(const Poly& p);
Poly squarefree_part(const Poly& p);

// Square root in K[t] when p is a perfect square; std::nullopt-like flag via bool.
bool poly_sqrt(const Poly& p, Poly& root);

// Rational function num/den with den monic and coprime to num.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const FieldElem& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& b);
  RatFunc& operator-=(const RatFunc& b);
  RatFunc& operator*=(const RatFunc& b);
  RatFunc& operator/=(const RatFunc& b);
  bool operator==(const RatFunc& b) const { return num_ == b.num_ && den_ == b.den_; }

  RatFunc inv() const;
  // valuation at t = v (negative for poles)
  int ord_at(const FieldElem& v) const;
  // valuation at infinity: deg den - deg num
  int ord_inf() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  Poly num_, den_;
};

inline RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
inline RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
inline RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
inline RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

}  // namespace wcc
