#include "wcc/poly.hpp"

#include "wcc/errors.hpp"
#include "wcc/roots.hpp"

namespace wcc {

Poly::Poly(const FieldElem& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(long c) : Poly(FieldElem(c)) {}

Poly::Poly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const FieldElem& c, int deg) {
  if (c.is_zero()) return Poly();
  std::vector<FieldElem> v(deg + 1);
  v[deg] = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const FieldElem& v) { return Poly(std::vector<FieldElem>{-v, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return FieldElem();
  return c_[k];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  for (size_t k = 0; k < b.c_.size(); ++k) c_[k] += b.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  for (size_t k = 0; k < b.c_.size(); ++k) c_[k] -= b.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& b) {
  if (c_.empty() || b.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<FieldElem> r(c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += c_[i] * b.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const FieldElem& b) {
  for (auto& c : c_) c *= b;
  trim();
  return *this;
}

FieldElem Poly::eval(const FieldElem& v) const {
  FieldElem r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<FieldElem> r(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * FieldElem(static_cast<long>(k));
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this * lc().inv();
}

Poly Poly::shift(const FieldElem& v) const {
  // Horner in the ring: ((c_n)(t+v) + c_{n-1})(t+v) + ...
  Poly lin(std::vector<FieldElem>{v, 1});
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Poly(*it);
  return r;
}

Poly Poly::truncate(int n) const {
  if (static_cast<int>(c_.size()) <= n) return *this;
  return Poly(std::vector<FieldElem>(c_.begin(), c_.begin() + std::max(n, 0)));
}

Poly Poly::reverse(int deg) const {
  if (deg < degree()) throw PreconditionError("reverse: nominal degree too small");
  std::vector<FieldElem> r(deg + 1);
  for (int k = 0; k <= degree(); ++k) r[deg - k] = c_[k];
  return Poly(std::move(r));
}

int Poly::ord0() const {
  if (c_.empty()) throw PreconditionError("order of the zero polynomial");
  int k = 0;
  while (c_[k].is_zero()) ++k;
  return k;
}

int Poly::ord_at(const FieldElem& v) const {
  if (v.is_zero()) return ord0();
  if (c_.empty()) throw PreconditionError("order of the zero polynomial");
  Poly lin = linear_root(v);
  Poly p = *this;
  int k = 0;
  while (true) {
    auto [q, r] = divmod(p, lin);
    if (!r.is_zero()) return k;
    p = q;
    ++k;
  }
}

Poly Poly::compose(const Poly& inner) const {
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + Poly(*it);
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const FieldElem& c = c_[k];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string cs;
    bool neg = false;
    if (c.is_rational()) {
      Rational q = c[0];
      neg = q < 0;
      if (neg) q = -q;
      if (q != 1 || mono.empty()) cs = q.get_str();
    } else {
      cs = "(" + c.to_string() + ")";
    }
    std::string term = cs;
    if (!mono.empty()) term = cs.empty() ? mono : cs + "*" + mono;
    if (first) {
      out += (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

Poly pow(const Poly& p, int e) {
  Poly r(1), b = p;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<FieldElem> r = a.coeffs();
  const auto& bc = b.coeffs();
  int db = b.degree();
  FieldElem binv = b.lc().inv();
  std::vector<FieldElem> q(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    FieldElem f = r[k] * binv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * bc[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw PreconditionError("inexact polynomial division");
  return q;
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

// Euclid over the field K with every remainder made monic; over a field this
// plays the role of the primitive PRS and keeps coefficients small.
Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Poly r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0(1), s1, u0, u1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = s0 - q * s1, u2 = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  FieldElem li = r0.lc().inv();
  return {r0 * li, s0 * li, u0 * li};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  auto [g, s, u] = xgcd(a % m, m);
  (void)u;
  if (g.degree() != 0) throw PreconditionError("polynomial not invertible modulo");
  return s % m;
}

// Yun's algorithm.
std::vector<SqfFactor> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("square-free decomposition of zero");
  std::vector<SqfFactor> out;
  if (p.degree() == 0) return out;
  Poly f = p.monic();
  Poly d = f.derivative();
  Poly a = gcd(f, d);
  Poly b = f / a;
  Poly c = d * a.lc().inv() / a;  // a is monic, so this is d/a
  Poly e = c - b.derivative();
  int k = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, e);
    if (g.degree() > 0) out.push_back({g, k});
    b = b / g;
    c = e / g;
    e = c - b.derivative();
    ++k;
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("square-free part of zero");
  if (p.degree() <= 0) return Poly(1);
  return p.monic() / gcd(p, p.derivative());
}

bool poly_sqrt(const Poly& p, Poly& root) {
  if (p.is_zero()) {
    root = Poly();
    return true;
  }
  int d = p.degree();
  if (d % 2) return false;
  FieldElem lead;
  if (!field_sqrt(p.lc(), lead)) return false;
  int h = d / 2;
  // Determine coefficients from the top down, then verify.
  std::vector<FieldElem> r(h + 1);
  r[h] = lead;
  FieldElem two_lead_inv = (lead * FieldElem(2)).inv();
  for (int k = h - 1; k >= 0; --k) {
    // coefficient of t^(h+k) in r^2 must equal p's
    FieldElem s;
    for (int i = k + 1; i < h; ++i) {
      int j = h + k - i;
      if (j >= k + 1 && j <= h - 1) s += r[i] * r[j];
    }
    r[k] = (p.coeff(h + k) - s) * two_lead_inv;
  }
  Poly cand(std::move(r));
  if (cand * cand != p) return false;
  if (cand.lc().lead_sign() < 0) cand = -cand;
  root = cand;
  return true;
}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  FieldElem l = den_.lc().inv();
  num_ *= l;
  den_ *= l;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& b) {
  if (den_ == b.den_) {
    *this = RatFunc(num_ + b.num_, den_);
  } else {
    *this = RatFunc(num_ * b.den_ + b.num_ * den_, den_ * b.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& b) { return *this += -b; }

RatFunc& RatFunc::operator*=(const RatFunc& b) {
  *this = RatFunc(num_ * b.num_, den_ * b.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& b) { return *this *= b.inv(); }

RatFunc RatFunc::inv() const {
  if (num_.is_zero()) throw DivisionByZero();
  return RatFunc(den_, num_);
}

int RatFunc::ord_at(const FieldElem& v) const {
  if (num_.is_zero()) throw PreconditionError("order of zero");
  return num_.ord_at(v) - den_.ord_at(v);
}

int RatFunc::ord_inf() const {
  if (num_.is_zero()) throw PreconditionError("order of zero");
  return den_.degree() - num_.degree();
}

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace wcc
