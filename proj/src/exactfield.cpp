#include "wcc/exactfield.hpp"

#include "wcc/errors.hpp"
#include "wcc/parse.hpp"

namespace wcc {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

FieldElem::FieldElem(long n) { c_[0] = n; }

FieldElem::FieldElem(const Rational& q) {
  c_[0] = q;
  c_[0].canonicalize();
}

FieldElem::FieldElem(Rational c0, Rational c1, Rational c2, Rational c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
  for (auto& c : c_) c.canonicalize();
}

bool FieldElem::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool FieldElem::is_one() const {
  return c_[0] == 1 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool FieldElem::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

bool FieldElem::is_real() const { return c_[2] == 0 && c_[3] == 0; }

FieldElem FieldElem::operator-() const {
  FieldElem r;
  for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& b) {
  for (int k = 0; k < 4; ++k) c_[k] += b.c_[k];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& b) {
  for (int k = 0; k < 4; ++k) c_[k] -= b.c_[k];
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& b) {
  const auto& a = c_;
  const auto& d = b.c_;
  if (b.is_rational()) {
    for (auto& c : c_) c *= d[0];
    return *this;
  }
  Rational r0 = a[0] * d[0] + 2 * a[1] * d[1] - a[2] * d[2] - 2 * a[3] * d[3];
  Rational r1 = a[0] * d[1] + a[1] * d[0] - a[2] * d[3] - a[3] * d[2];
  Rational r2 = a[0] * d[2] + a[2] * d[0] + 2 * a[1] * d[3] + 2 * a[3] * d[1];
  Rational r3 = a[0] * d[3] + a[3] * d[0] + a[1] * d[2] + a[2] * d[1];
  c_ = {std::move(r0), std::move(r1), std::move(r2), std::move(r3)};
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& b) {
  if (b.is_rational()) {
    if (b.c_[0] == 0) throw DivisionByZero();
    for (auto& c : c_) c /= b.c_[0];
    return *this;
  }
  return *this *= b.inv();
}

FieldElem FieldElem::conj_sqrt2() const { return FieldElem(c_[0], -c_[1], c_[2], -c_[3]); }

FieldElem FieldElem::conj_i() const { return FieldElem(c_[0], c_[1], -c_[2], -c_[3]); }

Rational FieldElem::norm() const {
  FieldElem s = conj_sqrt2();
  FieldElem t = conj_i();
  FieldElem st = s.conj_i();
  return (*this * s * t * st)[0];
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw DivisionByZero();
  FieldElem s = conj_sqrt2();
  FieldElem t = conj_i();
  FieldElem st = s.conj_i();
  FieldElem adj = s * t * st;
  Rational n = (*this * adj)[0];
  for (auto& c : adj.c_) c /= n;
  return adj;
}

int FieldElem::lead_sign() const {
  for (const auto& c : c_)
    if (c != 0) return sgn(c);
  return 0;
}

bool FieldElem::operator==(const FieldElem& b) const { return c_ == b.c_; }

std::strong_ordering FieldElem::operator<=>(const FieldElem& b) const {
  for (int k = 0; k < 4; ++k) {
    int c = cmp(c_[k], b.c_[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string FieldElem::to_string() const {
  static const char* names[4] = {"", "r2", "i", "i*r2"};
  std::string out;
  int terms = 0;
  for (int k = 0; k < 4; ++k) {
    if (c_[k] == 0) continue;
    Rational c = c_[k];
    bool neg = c < 0;
    if (neg) c = -c;
    if (terms == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k == 0) {
      out += c.get_str();
    } else if (c == 1) {
      out += names[k];
    } else if (c.get_num() == 1) {
      out += std::string(names[k]) + "/" + c.get_den().get_str();
    } else {
      out += c.get_str() + "*" + names[k];
    }
    ++terms;
  }
  if (terms == 0) return "0";
  return out;
}

FieldElem pow(const FieldElem& a, long e) {
  if (e < 0) return pow(a.inv(), -e);
  FieldElem r(1), b = a;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

FieldElem parse_field(const std::string& text) {
  MPoly p = parse_mpoly(text);
  if (!p.is_constant()) throw ParseError("expected a field constant: " + text);
  return p.constant_term();
}

}  // namespace wcc
