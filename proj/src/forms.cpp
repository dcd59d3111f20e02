#include "wcc/forms.hpp"

#include <algorithm>

#include "wcc/errors.hpp"

namespace wcc {

namespace {

std::string coeff_prefix(const FieldElem& c, bool has_mono, bool first, std::string& sign) {
  bool neg = false;
  std::string cs;
  if (c.is_rational()) {
    Rational q = c[0];
    neg = q < 0;
    if (neg) q = -q;
    if (q != 1 || !has_mono) cs = q.get_str();
  } else if (c.lead_sign() < 0 && !first) {
    neg = true;
    cs = "(" + (-c).to_string() + ")";
  } else {
    cs = "(" + c.to_string() + ")";
  }
  sign = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  return cs;
}

std::string join_term(const std::string& cs, const std::string& mono) {
  if (mono.empty()) return cs;
  if (cs.empty()) return mono;
  return cs + "*" + mono;
}

std::string power(const std::string& v, int e) {
  if (e == 0) return "";
  if (e == 1) return v;
  return v + "^" + std::to_string(e);
}

std::string mono_join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(const Poly& c) {
  if (!c.is_zero()) c_.push_back(c);
}

BiPoly::BiPoly(std::vector<Poly> coeffs) : c_(std::move(coeffs)) { trim(); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Poly& BiPoly::coeff_x(int k) const {
  static const Poly zero;
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[k];
}

int BiPoly::deg_t() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].is_zero()) d = std::max(d, c_[j].degree() + static_cast<int>(j));
  return d;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  for (size_t k = 0; k < b.c_.size(); ++k) c_[k] += b.c_[k];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& b) {
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  for (size_t k = 0; k < b.c_.size(); ++k) c_[k] -= b.c_[k];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& b) {
  if (c_.empty() || b.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Poly> r(c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += c_[i] * b.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Poly& b) {
  for (auto& p : c_) p *= b;
  trim();
  return *this;
}

FieldElem BiPoly::eval(const FieldElem& t, const FieldElem& x) const {
  FieldElem r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->eval(t);
  return r;
}

Poly BiPoly::subst_x(const Poly& p) const {
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * p + *it;
  return r;
}

Poly BiPoly::at_t(const FieldElem& v) const {
  std::vector<FieldElem> r;
  for (const auto& p : c_) r.push_back(p.eval(v));
  return Poly(std::move(r));
}

BiPoly BiPoly::translate(const FieldElem& a, const FieldElem& b) const {
  BiPoly lin(std::vector<Poly>{Poly(b), Poly(1)});
  BiPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + BiPoly(it->shift(a));
  return r;
}

BiPoly BiPoly::swap_vars() const {
  std::vector<Poly> r(std::max(deg_t() + 1, 0));
  for (int j = 0; j <= deg_x(); ++j)
    for (int i = 0; i <= c_[j].degree(); ++i)
      r[i] += Poly::monomial(c_[j].coeff(i), j);
  return BiPoly(std::move(r));
}

BiPoly BiPoly::d_t() const {
  std::vector<Poly> r;
  for (const auto& p : c_) r.push_back(p.derivative());
  return BiPoly(std::move(r));
}

BiPoly BiPoly::d_x() const {
  std::vector<Poly> r;
  for (size_t j = 1; j < c_.size(); ++j) r.push_back(c_[j] * FieldElem(static_cast<long>(j)));
  return BiPoly(std::move(r));
}

BiPoly BiPoly::lowest_part(int& degree) const {
  degree = -1;
  if (c_.empty()) return BiPoly();
  int best = -1;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    int d = c_[j].ord0() + static_cast<int>(j);
    if (best < 0 || d < best) best = d;
  }
  std::vector<Poly> r(c_.size());
  for (size_t j = 0; j < c_.size() && static_cast<int>(j) <= best; ++j)
    r[j] = Poly::monomial(c_[j].coeff(best - static_cast<int>(j)), best - static_cast<int>(j));
  degree = best;
  return BiPoly(std::move(r));
}

std::string BiPoly::to_string(const std::string& tv, const std::string& xv) const {
  std::string out;
  bool first = true;
  for (int j = deg_x(); j >= 0; --j) {
    for (int i = c_[j].degree(); i >= 0; --i) {
      FieldElem c = c_[j].coeff(i);
      if (c.is_zero()) continue;
      std::string mono = mono_join({power(tv, i), power(xv, j)});
      std::string sign;
      std::string cs = coeff_prefix(c, !mono.empty(), first, sign);
      out += sign + join_term(cs, mono);
      first = false;
    }
  }
  return first ? "0" : out;
}

BiPoly pow(const BiPoly& p, int e) {
  BiPoly r(Poly(1)), b = p;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

// ---------------------------------------------------------------- Matrix3

Matrix3 Matrix3::identity() {
  Matrix3 m;
  for (int i = 0; i < 3; ++i) m.m_[i][i] = 1;
  return m;
}

FieldElem Matrix3::det() const {
  const auto& a = m_;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Matrix3 Matrix3::inverse() const {
  FieldElem d = det();
  if (d.is_zero()) throw PreconditionError("singular 3x3 matrix");
  FieldElem di = d.inv();
  Matrix3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r.m_[i][j] = (m_[i1][j1] * m_[i2][j2] - m_[i1][j2] * m_[i2][j1]) * di;
    }
  }
  return r;
}

Matrix3 Matrix3::operator*(const Matrix3& b) const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r.m_[i][j] += m_[i][k] * b.m_[k][j];
  return r;
}

Vec3 Matrix3::apply(const Vec3& v) const {
  Vec3 r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r[i] += m_[i][k] * v[k];
  return r;
}

// ---------------------------------------------------------------- TriForm

TriForm::TriForm(int degree, std::map<Exp3, FieldElem> terms) : deg_(degree) {
  for (auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    if (e[0] + e[1] + e[2] != degree || e[0] < 0 || e[1] < 0 || e[2] < 0)
      throw PreconditionError("non-homogeneous term in form of degree " + std::to_string(degree));
    terms_.emplace(e, c);
  }
}

TriForm TriForm::constant(const FieldElem& c) { return TriForm(0, {{Exp3{0, 0, 0}, c}}); }

TriForm TriForm::var(int which) {
  Exp3 e{0, 0, 0};
  e[which] = 1;
  return TriForm(1, {{e, FieldElem(1)}});
}

TriForm TriForm::linear(const Vec3& c) {
  return TriForm(1, {{Exp3{1, 0, 0}, c[0]}, {Exp3{0, 1, 0}, c[1]}, {Exp3{0, 0, 1}, c[2]}});
}

FieldElem TriForm::coeff(const Exp3& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElem() : it->second;
}

TriForm TriForm::operator-() const {
  TriForm r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TriForm& TriForm::operator+=(const TriForm& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  if (deg_ != b.deg_) throw PreconditionError("adding forms of different degree");
  for (const auto& [e, c] : b.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot.is_zero()) terms_.erase(e);
  }
  return *this;
}

TriForm& TriForm::operator-=(const TriForm& b) { return *this += -b; }

TriForm TriForm::operator*(const TriForm& b) const {
  std::map<Exp3, FieldElem> r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : b.terms_)
      r[{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}] += c1 * c2;
  return TriForm(deg_ + b.deg_, std::move(r));
}

TriForm TriForm::operator*(const FieldElem& c) const {
  std::map<Exp3, FieldElem> r;
  for (const auto& [e, v] : terms_) r[e] = v * c;
  return TriForm(deg_, std::move(r));
}

FieldElem TriForm::eval(const Vec3& p) const {
  FieldElem r;
  for (const auto& [e, c] : terms_) r += c * pow(p[0], long{e[0]}) * pow(p[1], long{e[1]}) * pow(p[2], long{e[2]});
  return r;
}

TriForm TriForm::partial(int which) const {
  std::map<Exp3, FieldElem> r;
  for (const auto& [e, c] : terms_) {
    if (e[which] == 0) continue;
    Exp3 f = e;
    f[which] -= 1;
    r[f] += c * FieldElem(static_cast<long>(e[which]));
  }
  return TriForm(std::max(deg_ - 1, 0), std::move(r));
}

TriForm TriForm::substitute(const std::array<TriForm, 3>& g) const {
  int e = g[0].degree();
  std::array<std::vector<TriForm>, 3> powers;
  for (int k = 0; k < 3; ++k) {
    powers[k].push_back(constant(1));
    for (int j = 1; j <= deg_; ++j) powers[k].push_back(powers[k].back() * g[k]);
  }
  TriForm r(deg_ * e, {});
  for (const auto& [ex, c] : terms_) {
    TriForm term = powers[0][ex[0]] * powers[1][ex[1]] * powers[2][ex[2]] * c;
    r += term;
  }
  return TriForm(deg_ * e, r.terms_);
}

TriForm TriForm::substitute(const Matrix3& m) const {
  return substitute({linear(m.row(0)), linear(m.row(1)), linear(m.row(2))});
}

TriForm TriForm::strip_monomial(Exp3& removed) const {
  removed = {0, 0, 0};
  if (terms_.empty()) return *this;
  for (int k = 0; k < 3; ++k) {
    int m = deg_;
    for (const auto& [e, c] : terms_) m = std::min(m, e[k]);
    removed[k] = m;
  }
  std::map<Exp3, FieldElem> r;
  for (const auto& [e, c] : terms_) r[{e[0] - removed[0], e[1] - removed[1], e[2] - removed[2]}] = c;
  return TriForm(deg_ - removed[0] - removed[1] - removed[2], std::move(r));
}

TriForm TriForm::normalized() const {
  if (terms_.empty()) return *this;
  return *this * terms_.rbegin()->second.inv();
}

bool TriForm::proportional(const TriForm& b) const {
  if (is_zero() || b.is_zero()) return is_zero() && b.is_zero();
  return deg_ == b.deg_ && normalized() == b.normalized();
}

BiPoly TriForm::dehomogenize() const { return dehomogenize_at(2); }

BiPoly TriForm::dehomogenize_at(int which) const {
  int a = which == 0 ? 1 : 0;
  int b = which == 2 ? 1 : 2;
  std::vector<Poly> r;
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(r.size()) <= e[b]) r.resize(e[b] + 1);
    r[e[b]] += Poly::monomial(c, e[a]);
  }
  return BiPoly(std::move(r));
}

std::string TriForm::to_string() const {
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = mono_join({power("T", e[0]), power("X", e[1]), power("Z", e[2])});
    std::string sign;
    std::string cs = coeff_prefix(c, !mono.empty(), first, sign);
    out += sign + join_term(cs, mono);
    first = false;
  }
  return first ? "0" : out;
}

TriForm pow(const TriForm& f, int e) {
  TriForm r = TriForm::constant(1);
  for (int k = 0; k < e; ++k) r = r * f;
  return r;
}

TriForm homogenize(const BiPoly& f, int degree) {
  if (f.total_degree() > degree) throw PreconditionError("homogenize: degree too small");
  std::map<Exp3, FieldElem> r;
  for (int j = 0; j <= f.deg_x(); ++j)
    for (int i = 0; i <= f.coeff_x(j).degree(); ++i) {
      FieldElem c = f.coeff(i, j);
      if (!c.is_zero()) r[{i, j, degree - i - j}] = c;
    }
  return TriForm(degree, std::move(r));
}

// ---------------------------------------------------------------- MPoly

MPoly MPoly::constant(const FieldElem& c) {
  MPoly p;
  if (!c.is_zero()) p.terms_[{0, 0, 0, 0, 0}] = c;
  return p;
}

MPoly MPoly::var(int which) {
  MPoly p;
  Exp5 e{0, 0, 0, 0, 0};
  e[which] = 1;
  p.terms_[e] = 1;
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp5{0, 0, 0, 0, 0});
}

FieldElem MPoly::constant_term() const {
  auto it = terms_.find({0, 0, 0, 0, 0});
  return it == terms_.end() ? FieldElem() : it->second;
}

bool MPoly::uses(int which) const {
  for (const auto& [e, c] : terms_)
    if (e[which] > 0) return true;
  return false;
}

MPoly MPoly::operator-() const { return scaled(-1); }

MPoly MPoly::operator+(const MPoly& b) const {
  MPoly r = *this;
  for (const auto& [e, c] : b.terms_) {
    auto& slot = r.terms_[e];
    slot += c;
    if (slot.is_zero()) r.terms_.erase(e);
  }
  return r;
}

MPoly MPoly::operator-(const MPoly& b) const { return *this + (-b); }

MPoly MPoly::operator*(const MPoly& b) const {
  MPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : b.terms_) {
      Exp5 e;
      for (int k = 0; k < 5; ++k) e[k] = e1[k] + e2[k];
      r.terms_[e] += c1 * c2;
    }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

MPoly MPoly::scaled(const FieldElem& c) const {
  MPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

Poly MPoly::to_poly() const {
  for (int k = 1; k < 5; ++k)
    if (uses(k)) throw ParseError("expected a polynomial in t only");
  Poly r;
  for (const auto& [e, c] : terms_) r += Poly::monomial(c, e[0]);
  return r;
}

BiPoly MPoly::to_bipoly() const {
  for (int k = 2; k < 5; ++k)
    if (uses(k)) throw ParseError("expected a polynomial in t and x only");
  std::vector<Poly> r;
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(r.size()) <= e[1]) r.resize(e[1] + 1);
    r[e[1]] += Poly::monomial(c, e[0]);
  }
  return BiPoly(std::move(r));
}

TriForm MPoly::to_triform() const {
  bool affine = uses(0) || uses(1);
  bool proj = uses(2) || uses(3) || uses(4);
  if (affine && proj) throw ParseError("cannot mix affine (t, x) and projective (T, X, Z) variables");
  if (affine) {
    BiPoly b = to_bipoly();
    return homogenize(b, b.total_degree());
  }
  if (terms_.empty()) return TriForm();
  int d = -1;
  std::map<Exp3, FieldElem> r;
  for (const auto& [e, c] : terms_) {
    int s = e[2] + e[3] + e[4];
    if (d < 0) d = s;
    if (s != d) throw ParseError("form is not homogeneous");
    r[{e[2], e[3], e[4]}] = c;
  }
  return TriForm(d, std::move(r));
}

MPoly pow(const MPoly& p, int e) {
  MPoly r = MPoly::constant(1);
  for (int k = 0; k < e; ++k) r = r * p;
  return r;
}

}  // namespace wcc
