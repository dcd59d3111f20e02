#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "wcc/poly.hpp"

namespace wcc {

// Polynomial in (t, x) stored as a dense list of K[t] coefficients by x-degree.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Poly& c);  // NOLINT: constant in x
  explicit BiPoly(std::vector<Poly> coeffs);

  static BiPoly x_var() { return BiPoly(std::vector<Poly>{Poly(), Poly(1)}); }
  static BiPoly t_var() { return BiPoly(Poly::var()); }

  int deg_x() const { return static_cast<int>(c_.size()) - 1; }
  int deg_t() const;
  int total_degree() const;
  bool is_zero() const { return c_.empty(); }
  const Poly& coeff_x(int k) const;
  const std::vector<Poly>& coeffs() const { return c_; }
  FieldElem coeff(int i, int j) const { return coeff_x(j).coeff(i); }  // t^i x^j

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& b);
  BiPoly& operator-=(const BiPoly& b);
  BiPoly& operator*=(const BiPoly& b);
  BiPoly& operator*=(const Poly& b);
  bool operator==(const BiPoly& b) const { return c_ == b.c_; }

  FieldElem eval(const FieldElem& t, const FieldElem& x) const;
  // substitute x := p(t)
  Poly subst_x(const Poly& p) const;
  // restrict t := v, giving a polynomial in x
  Poly at_t(const FieldElem& v) const;
  // (t, x) -> (t + a, x + b)
  BiPoly translate(const FieldElem& a, const FieldElem& b) const;
  BiPoly swap_vars() const;
  BiPoly d_t() const;
  BiPoly d_x() const;
  // Lowest-degree nonzero homogeneous part and its degree.
  BiPoly lowest_part(int& degree) const;

  std::string to_string(const std::string& tv = "t", const std::string& xv = "x") const;

 private:
  void trim();
  std::vector<Poly> c_;
};

inline BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
inline BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
inline BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
BiPoly pow(const BiPoly& p, int e);

using Exp3 = std::array<int, 3>;
using Vec3 = std::array<FieldElem, 3>;

class Matrix3 {
 public:
  Matrix3() = default;
  explicit Matrix3(std::array<Vec3, 3> rows) : m_(std::move(rows)) {}
  static Matrix3 identity();
  const Vec3& row(int i) const { return m_[i]; }
  const FieldElem& at(int i, int j) const { return m_[i][j]; }
  FieldElem det() const;
  Matrix3 inverse() const;
  Matrix3 operator*(const Matrix3& b) const;
  Vec3 apply(const Vec3& v) const;
  bool operator==(const Matrix3& b) const { return m_ == b.m_; }

 private:
  std::array<Vec3, 3> m_{};
};

// Homogeneous form in T, X, Z.
class TriForm {
 public:
  TriForm() = default;
  TriForm(int degree, std::map<Exp3, FieldElem> terms);
  static TriForm constant(const FieldElem& c);
  static TriForm var(int which);  // 0 = T, 1 = X, 2 = Z
  static TriForm linear(const Vec3& coeffs);

  int degree() const { return deg_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exp3, FieldElem>& terms() const { return terms_; }
  FieldElem coeff(const Exp3& e) const;

  TriForm operator-() const;
  TriForm& operator+=(const TriForm& b);
  TriForm& operator-=(const TriForm& b);
  TriForm operator*(const TriForm& b) const;
  TriForm operator*(const FieldElem& c) const;
  bool operator==(const TriForm& b) const { return deg_ == b.deg_ && terms_ == b.terms_; }

  FieldElem eval(const Vec3& p) const;
  TriForm partial(int which) const;
  // F'(v) = F(M v)
  TriForm substitute(const Matrix3& m) const;
  // F'(T,X,Z) = F(G0, G1, G2) for forms of equal degree
  TriForm substitute(const std::array<TriForm, 3>& g) const;
  // Divides out the largest monomial T^a X^b Z^c.
  TriForm strip_monomial(Exp3& removed) const;
  // Scaled so the coefficient of the largest monomial (lexicographic) is 1.
  TriForm normalized() const;
  bool proportional(const TriForm& b) const;

  // Chart Z = 1 with t = T, x = X.
  BiPoly dehomogenize() const;
  // Chart setting coordinate `which` to 1; the remaining two in order become (t, x).
  BiPoly dehomogenize_at(int which) const;

  std::string to_string() const;

 private:
  int deg_ = 0;
  std::map<Exp3, FieldElem> terms_;
};

TriForm pow(const TriForm& f, int e);
TriForm homogenize(const BiPoly& f, int degree);

// Sparse polynomial in the five grammar variables t, x, T, X, Z; the parser's
// output before it is specialised.
using Exp5 = std::array<int, 5>;
class MPoly {
 public:
  MPoly() = default;
  static MPoly constant(const FieldElem& c);
  static MPoly var(int which);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElem constant_term() const;
  const std::map<Exp5, FieldElem>& terms() const { return terms_; }
  bool uses(int which) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& b) const;
  MPoly operator-(const MPoly& b) const;
  MPoly operator*(const MPoly& b) const;
  MPoly scaled(const FieldElem& c) const;

  Poly to_poly() const;
  BiPoly to_bipoly() const;
  // Homogeneous T,X,Z input is taken as is; t,x input is homogenized to its total degree.
  TriForm to_triform() const;

 private:
  std::map<Exp5, FieldElem> terms_;
};

MPoly pow(const MPoly& p, int e);

}  // namespace wcc
