#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <string>

namespace wcc {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
std::string to_string(const Rational& q);

// Element of Q(sqrt2, i) in the basis {1, sqrt2, i, i*sqrt2}.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long n);  // NOLINT: implicit from integers is convenient for literals
  FieldElem(const Rational& q);  // NOLINT
  FieldElem(Rational c0, Rational c1, Rational c2, Rational c3);

  static FieldElem sqrt2() { return FieldElem(0, 1, 0, 0); }
  static FieldElem imag() { return FieldElem(0, 0, 1, 0); }

  const Rational& operator[](int k) const { return c_[k]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  bool is_real() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& b);
  FieldElem& operator-=(const FieldElem& b);
  FieldElem& operator*=(const FieldElem& b);
  FieldElem& operator/=(const FieldElem& b);

  // sigma: sqrt2 -> -sqrt2, tau: i -> -i
  FieldElem conj_sqrt2() const;
  FieldElem conj_i() const;
  Rational norm() const;
  FieldElem inv() const;

  // Leading sign used to pick canonical representatives: the sign of the
  // first nonzero coordinate.
  int lead_sign() const;

  bool operator==(const FieldElem& b) const;
  std::strong_ordering operator<=>(const FieldElem& b) const;

  std::string to_string() const;

 private:
  std::array<Rational, 4> c_{};
};

inline FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
inline FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
inline FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
inline FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

FieldElem pow(const FieldElem& a, long e);

// Parses the literal grammar: integers, /, r2, i, +, -, *, ^, parentheses.
FieldElem parse_field(const std::string& text);

}  // namespace wcc
