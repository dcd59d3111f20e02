#include "wcc/ellsurface.hpp"

#include <algorithm>

#include "wcc/errors.hpp"
#include "wcc/roots.hpp"

namespace wcc {

WeierstrassModel::WeierstrassModel(Poly a2, Poly a4, Poly a6)
    : a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6)) {
  if (a2_.degree() > 2 || a4_.degree() > 4 || a6_.degree() > 6)
    throw PreconditionError("coefficient degrees exceed those of a rational elliptic surface");
  if (discriminant().is_zero()) throw PreconditionError("singular model: discriminant vanishes identically");
}

WeierstrassModel WeierstrassModel::from_quartic(const TriForm& q) {
  BiPoly f = q.dehomogenize();
  if (f.deg_x() != 3 || f.coeff_x(3).degree() != 0)
    throw PreconditionError(
        "the (t, x) chart is not a cubic in x with constant leading coefficient; "
        "apply the coordinate change sending the tangent point to [0,1,0] and its tangent line to Z = 0 first");
  FieldElem l = f.coeff_x(3).lc().inv();
  return WeierstrassModel(f.coeff_x(2) * l, f.coeff_x(1) * l, f.coeff_x(0) * l);
}

Poly WeierstrassModel::discriminant() const {
  Poly b2 = a2_ * FieldElem(4), b4 = a4_ * FieldElem(2), b6 = a6_ * FieldElem(4);
  Poly b8 = a2_ * a6_ * FieldElem(4) - a4_ * a4_;
  return -(b2 * b2 * b8) - b4 * b4 * b4 * FieldElem(8) - b6 * b6 * FieldElem(27) + b2 * b4 * b6 * FieldElem(9);
}

Poly WeierstrassModel::c4() const {
  Poly b2 = a2_ * FieldElem(4), b4 = a4_ * FieldElem(2);
  return b2 * b2 - b4 * FieldElem(24);
}

RatFunc WeierstrassModel::cubic(const RatFunc& x) const {
  return ((x + RatFunc(a2_)) * x + RatFunc(a4_)) * x + RatFunc(a6_);
}

WeierstrassModel WeierstrassModel::at_infinity() const {
  return WeierstrassModel(a2_.reverse(2), a4_.reverse(4), a6_.reverse(6));
}

WeierstrassModel WeierstrassModel::translated(const FieldElem& v) const {
  return WeierstrassModel(a2_.shift(v), a4_.shift(v), a6_.shift(v));
}

std::string WeierstrassModel::to_string() const {
  return "y^2 = x^3 + (" + a2_.to_string() + ")*x^2 + (" + a4_.to_string() + ")*x + (" + a6_.to_string() + ")";
}

bool Section::operator==(const Section& b) const {
  if (zero_ || b.zero_) return zero_ == b.zero_;
  return x_ == b.x_ && y_ == b.y_;
}

bool Section::in_stratum() const {
  if (zero_) return false;
  return x_.is_polynomial() && y_.is_polynomial() && x_.num().degree() <= 2 && y_.num().degree() <= 3;
}

std::string Section::to_string() const {
  if (zero_) return "O";
  return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

bool on_curve(const WeierstrassModel& m, const Section& p) {
  if (p.is_zero()) return true;
  return p.y() * p.y() == m.cubic(p.x());
}

Section neg(const Section& p) {
  if (p.is_zero()) return p;
  return Section(p.x(), -p.y());
}

Section add(const WeierstrassModel& m, const Section& p, const Section& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  RatFunc lambda;
  if (p.x() == q.x()) {
    if (p.y() == -q.y()) return Section::zero();
    RatFunc x = p.x();
    lambda = (RatFunc(3) * x * x + RatFunc(m.a2() * FieldElem(2)) * x + RatFunc(m.a4())) / (RatFunc(2) * p.y());
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  RatFunc x3 = lambda * lambda - RatFunc(m.a2()) - p.x() - q.x();
  RatFunc y3 = -(lambda * (x3 - p.x()) + p.y());
  return Section(x3, y3);
}

Section sub(const WeierstrassModel& m, const Section& p, const Section& q) { return add(m, p, neg(q)); }

Section mul(const WeierstrassModel& m, long k, const Section& p) {
  if (k < 0) return neg(mul(m, -k, p));
  Section r, b = p;
  while (k) {
    if (k & 1) r = add(m, r, b);
    k >>= 1;
    if (k) b = add(m, b, b);
  }
  return r;
}

namespace {

// s^w * f(1/s)
RatFunc invert_variable(const RatFunc& f, int w) {
  if (f.is_zero()) return f;
  int dn = f.num().degree(), dd = f.den().degree();
  Poly num = f.num().reverse(dn), den = f.den().reverse(dd);
  int e = w + dd - dn;
  if (e >= 0) num *= Poly::monomial(1, e);
  else den *= Poly::monomial(1, -e);
  return RatFunc(num, den);
}

RatFunc shift_rat(const RatFunc& f, const FieldElem& v) { return RatFunc(f.num().shift(v), f.den().shift(v)); }

}  // namespace

Section section_at_infinity(const Section& p) {
  if (p.is_zero()) return p;
  return Section(invert_variable(p.x(), 2), invert_variable(p.y(), 3));
}

Section section_translated(const Section& p, const FieldElem& v) {
  if (p.is_zero()) return p;
  return Section(shift_rat(p.x(), v), shift_rat(p.y(), v));
}

PlaneCurve section_to_plane_curve(const Section& p) {
  if (!p.in_stratum()) throw PreconditionError("section is outside the line/conic stratum");
  const Poly& x = p.x().num();
  BiPoly f = BiPoly::x_var() - BiPoly(x);
  return PlaneCurve(homogenize(f, std::max(1, x.degree())));
}

std::pair<Section, Section> plane_curve_to_sections(const WeierstrassModel& m, const TriForm& c) {
  if (c.degree() != 1 && c.degree() != 2) throw PreconditionError("expected a line or a conic");
  BiPoly f = c.dehomogenize();
  if (f.deg_x() != 1 || f.coeff_x(1).degree() != 0)
    throw PreconditionError("curve is not of the form x = x(t) in the chart");
  Poly x = -f.coeff_x(0) * f.coeff_x(1).lc().inv();
  RatFunc rhs = m.cubic(RatFunc(x));
  Poly y;
  if (!poly_sqrt(rhs.num(), y))
    throw PreconditionError("the cubic does not evaluate to a square in K[t]; no section through the tangent point");
  return {Section(RatFunc(x), RatFunc(y)), Section(RatFunc(x), RatFunc(-y))};
}

int FiberInfo::components() const {
  switch (type) {
    case Kodaira::In: return n;
    case Kodaira::II: return 1;
    case Kodaira::III: return 2;
    case Kodaira::IV: return 3;
  }
  return 1;
}

int FiberInfo::euler() const {
  switch (type) {
    case Kodaira::In: return n;
    case Kodaira::II: return 2;
    case Kodaira::III: return 3;
    case Kodaira::IV: return 4;
  }
  return 0;
}

std::string FiberInfo::type_name() const {
  switch (type) {
    case Kodaira::In: return "I" + std::to_string(n);
    case Kodaira::II: return "II";
    case Kodaira::III: return "III";
    case Kodaira::IV: return "IV";
  }
  return "?";
}

std::string FiberInfo::location_name() const { return at_infinity ? "inf" : location.to_string(); }

namespace {

FiberInfo fiber_from_orders(int ord_delta, int ord_c4) {
  FiberInfo f;
  if (ord_c4 == 0) {
    f.type = Kodaira::In;
    f.n = ord_delta;
    return f;
  }
  switch (ord_delta) {
    case 2: f.type = Kodaira::II; break;
    case 3: f.type = Kodaira::III; break;
    case 4: f.type = Kodaira::IV; break;
    default:
      throw PreconditionError("fiber type outside I_n, II, III, IV (ord discriminant " + std::to_string(ord_delta) + ")");
  }
  return f;
}

}  // namespace

FiberReport classify_fibers(const WeierstrassModel& m) {
  Poly delta = m.discriminant(), c4 = m.c4();
  FiberReport rep;
  Poly residual = delta.monic();
  for (const auto& v : k_roots(delta)) {
    int od = delta.ord_at(v);
    int oc = c4.is_zero() ? 99 : c4.ord_at(v);
    FiberInfo f = fiber_from_orders(od, oc);
    f.location = v;
    rep.fibers.push_back(f);
    residual = residual / pow(Poly::linear_root(v), od);
  }
  int od_inf = 12 - delta.degree();
  if (od_inf > 0) {
    int oc_inf = c4.is_zero() ? 99 : 4 - c4.degree();
    FiberInfo f = fiber_from_orders(od_inf, oc_inf);
    f.at_infinity = true;
    rep.fibers.push_back(f);
  }
  // Whatever is left must be irreducible: I1, or II where c4 also vanishes.
  if (residual.degree() > 0) {
    for (const auto& sf : squarefree_decomposition(residual)) {
      if (sf.multiplicity == 1) continue;
      if (sf.multiplicity == 2 && !c4.is_zero() && (c4 % sf.factor).is_zero()) continue;
      throw PreconditionError("reducible fiber over a non-K-rational place");
    }
  }
  rep.residual_euler = std::max(residual.degree(), 0);
  int total = rep.residual_euler;
  for (const auto& f : rep.fibers) total += f.euler();
  if (total != 12) throw IntegrityError("Euler numbers of the fibers sum to " + std::to_string(total));
  return rep;
}

Poly series_inverse(const Poly& p, int n) {
  FieldElem p0 = p.coeff(0);
  if (p0.is_zero()) throw PreconditionError("series not invertible");
  FieldElem inv0 = p0.inv();
  std::vector<FieldElem> q(n);
  if (n > 0) q[0] = inv0;
  for (int k = 1; k < n; ++k) {
    FieldElem s;
    for (int j = 1; j <= k; ++j) s += p.coeff(j) * q[k - j];
    q[k] = -s * inv0;
  }
  return Poly(std::move(q));
}

Poly series_of(const RatFunc& f, int n) { return (f.num() * series_inverse(f.den(), n)).truncate(n); }

namespace {

int raw_component_index(const WeierstrassModel& m, const Section& p, const FiberInfo& f) {
  int mm = f.components();
  if (p.is_zero() || mm == 1) return 0;
  WeierstrassModel lm = f.at_infinity ? m.at_infinity() : m.translated(f.location);
  Section lp = f.at_infinity ? section_at_infinity(p) : section_translated(p, f.location);
  if (lp.x().den().coeff(0).is_zero()) return 0;  // meets the zero section's component
  int N = mm + 2;
  Poly xs = series_of(lp.x(), N), ys = series_of(lp.y(), N);
  FieldElem a2 = lm.a2().coeff(0), a4 = lm.a4().coeff(0), a6 = lm.a6().coeff(0);
  Poly cub(std::vector<FieldElem>{a6, a4, a2, 1});
  Poly g = gcd(cub, cub.derivative());
  FieldElem x0;
  if (g.degree() == 1) x0 = -g.coeff(0);
  else if (g.degree() == 2) x0 = -a2 / FieldElem(3);
  else throw IntegrityError("fiber at " + f.location_name() + " is not singular");
  if (xs.coeff(0) != x0 || !ys.coeff(0).is_zero()) return 0;
  if (mm == 2) return 1;

  Poly X0(x0);
  Poly A = lm.a2() + X0 * FieldElem(3);
  Poly B = lm.a4() + lm.a2() * X0 * FieldElem(2) + X0 * X0 * FieldElem(3);
  Poly C = lm.a6() + lm.a4() * X0 + lm.a2() * X0 * X0 + X0 * X0 * X0;
  Poly xp = xs - X0;

  if (f.type == Kodaira::IV) {
    if (!C.coeff(0).is_zero() || !C.coeff(1).is_zero()) throw IntegrityError("type IV normal form violated");
    FieldElem rho;
    if (!field_sqrt(C.coeff(2), rho))
      throw PreconditionError("components of the type IV fiber are not defined over K");
    FieldElem w = ys.coeff(1);
    if (w == rho) return 1;
    if (w == -rho) return 2;
    throw IntegrityError("section does not meet a type IV component consistently");
  }

  // I_n with n >= 3.
  int n = f.n;
  FieldElem s;
  if (!field_sqrt(A.coeff(0), s)) throw PreconditionError("non-split multiplicative fiber at " + f.location_name());
  // Power-series critical point X* of the translated cubic: 3X^2 + 2AX + B = 0.
  Poly xstar;
  for (int it = 0; it < 4 * N; ++it) {
    Poly h = (xstar * xstar * FieldElem(3) + A * xstar * FieldElem(2) + B).truncate(N);
    if (h.is_zero()) break;
    Poly dh = xstar * FieldElem(6) + A * FieldElem(2);
    Poly next = (xstar - h * series_inverse(dh, N)).truncate(N);
    if (next == xstar) break;
    xstar = next;
  }
  Poly d = (xp - xstar).truncate(N);
  int k = d.is_zero() ? N : d.ord0();
  if (2 * k >= n) {
    if (n % 2 == 0) return n / 2;
    throw IntegrityError("valuation walk exceeded the fiber at " + f.location_name());
  }
  FieldElem yk = ys.coeff(k), xk = d.coeff(k);
  if (yk == s * xk) return k;
  if (yk == -s * xk) return n - k;
  throw IntegrityError("valuation walk inconsistent at " + f.location_name());
}

}  // namespace

int component_index(const WeierstrassModel& m, const Section& p, const FiberInfo& f) {
  int mm = f.components();
  int raw = raw_component_index(m, p, f);
  return f.flipped ? (mm - raw) % mm : raw;
}

void orient_fibers(const WeierstrassModel& m, const Section& p, std::vector<FiberInfo>& fibers) {
  for (auto& f : fibers) {
    f.flipped = false;
    int mm = f.components();
    if (mm < 3) continue;
    int raw = raw_component_index(m, p, f);
    if (raw == mm - 1 && raw != 1) f.flipped = true;
  }
}

}  // namespace wcc
