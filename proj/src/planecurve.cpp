#include "wcc/planecurve.hpp"

#include <algorithm>

#include "wcc/errors.hpp"
#include "wcc/resultant.hpp"
#include "wcc/roots.hpp"

namespace wcc {

std::string kind_name(SingularityKind k) {
  switch (k) {
    case SingularityKind::Smooth: return "smooth";
    case SingularityKind::Node: return "node";
    case SingularityKind::Cusp: return "cusp";
    case SingularityKind::Other: return "other";
  }
  return "?";
}

std::string tangent_case_name(TangentCase c) {
  switch (c) {
    case TangentCase::S: return "s";
    case TangentCase::B: return "b";
    case TangentCase::SC: return "sc";
    case TangentCase::SN: return "sn";
  }
  return "?";
}

PlanePoint::PlanePoint(const Vec3& coords) : c_(coords) {
  int k = 2;
  while (k >= 0 && c_[k].is_zero()) --k;
  if (k < 0) throw PreconditionError("the zero vector is not a projective point");
  FieldElem s = c_[k].inv();
  for (auto& v : c_) v *= s;
}

std::string PlanePoint::to_string() const {
  return "[" + c_[0].to_string() + ", " + c_[1].to_string() + ", " + c_[2].to_string() + "]";
}

bool is_squarefree_form(const TriForm& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 1) return true;
  static const Vec3 centers[] = {{0, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 2, 3}, {3, 1, 2}, {2, 3, 1}, {5, 1, 7}};
  for (const auto& p : centers) {
    if (f.eval(p).is_zero()) continue;
    BiPoly g = f.substitute(matrix_with_center(p)).dehomogenize();
    return !resultant(g, g.d_x()).is_zero();
  }
  throw PreconditionError("could not find a projection center off the curve");
}

PlaneCurve::PlaneCurve(TriForm form, std::string name) : form_(std::move(form)), name_(std::move(name)) {
  if (form_.is_zero() || form_.degree() == 0) throw PreconditionError("a curve needs a nonconstant form");
  if (!is_squarefree_form(form_)) throw PreconditionError("curve form is not reduced: " + form_.to_string());
}

Matrix3 matrix_with_center(const Vec3& p) {
  static const Vec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      std::array<Vec3, 3> rows;
      for (int i = 0; i < 3; ++i) rows[i] = {basis[a][i], p[i], basis[b][i]};
      Matrix3 m(rows);
      if (!m.det().is_zero()) return m;
    }
  throw PreconditionError("zero projection center");
}

BiPoly local_equation(const TriForm& f, const PlanePoint& p) {
  int k = 2;
  while (p[k].is_zero()) --k;
  int a = k == 0 ? 1 : 0;
  int b = k == 2 ? 1 : 2;
  return f.dehomogenize_at(k).translate(p[a], p[b]);
}

SingularityKind local_kind(const BiPoly& f) {
  if (!f.eval(0, 0).is_zero()) throw PreconditionError("point is not on the curve");
  int m = 0;
  BiPoly low = f.lowest_part(m);
  if (m == 1) return SingularityKind::Smooth;
  if (m != 2) return SingularityKind::Other;
  FieldElem a = low.coeff(2, 0), b = low.coeff(1, 1), c = low.coeff(0, 2);
  if (!(b * b - FieldElem(4) * a * c).is_zero()) return SingularityKind::Node;
  // One tangent direction; an A2 point meets its tangent with multiplicity 3.
  FieldElem du, dv;
  if (!a.is_zero()) {
    du = -b / (FieldElem(2) * a);
    dv = 1;
  } else {
    du = 1;
    dv = 0;
  }
  Poly along;
  for (int j = 0; j <= f.deg_x(); ++j)
    for (int i = 0; i <= f.coeff_x(j).degree(); ++i)
      along += Poly::monomial(f.coeff(i, j) * pow(du, long{i}) * pow(dv, long{j}), i + j);
  if (along.is_zero()) return SingularityKind::Other;
  return along.ord0() == 3 ? SingularityKind::Cusp : SingularityKind::Other;
}

SingularityKind point_kind(const TriForm& f, const PlanePoint& p) { return local_kind(local_equation(f, p)); }

namespace {

void require_rational_roots(const Poly& p, const std::vector<FieldElem>& roots, const char* what) {
  if (squarefree_part(p).degree() != static_cast<int>(roots.size()))
    throw PreconditionError(std::string("non-K-rational ") + what);
}

Poly gcd_all(std::initializer_list<Poly> ps) {
  Poly g;
  for (const auto& p : ps) g = gcd(g, p);
  return g;
}

}  // namespace

std::vector<SingularPoint> singular_points(const PlaneCurve& c) {
  const TriForm& F = c.form();
  int d = F.degree();
  std::vector<SingularPoint> out;
  if (d <= 1) return out;
  static const Vec3 centers[] = {{0, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 2, 3}, {3, 1, 2}, {2, 3, 1}, {5, 1, 7}};
  const Vec3* center = nullptr;
  for (const auto& p : centers)
    if (!F.eval(p).is_zero()) {
      center = &p;
      break;
    }
  if (!center) throw PreconditionError("could not find a projection center off the curve");
  Matrix3 M = matrix_with_center(*center);
  TriForm G = F.substitute(M);
  BiPoly f = G.dehomogenize(), ft = f.d_t(), fx = f.d_x();

  // A t-value is singular iff Res_x(f, f_x + l f_t) vanishes there for d+1 values of l.
  Poly H;
  int used = 0;
  for (long lam = 0; used < d + 1; ++lam) {
    Poly r = resultant(f, fx + BiPoly(Poly(lam)) * ft);
    if (r.is_zero()) continue;
    H = gcd(H, r);
    ++used;
  }
  std::vector<PlanePoint> pts;
  if (H.degree() > 0) {
    auto ts = k_roots(H);
    require_rational_roots(H, ts, "singular point");
    for (const auto& t0 : ts) {
      Poly px = gcd_all({f.at_t(t0), fx.at_t(t0), ft.at_t(t0)});
      auto xs = k_roots(px);
      require_rational_roots(px, xs, "singular point");
      for (const auto& x0 : xs) pts.emplace_back(M.apply({t0, x0, 1}));
    }
  }
  // Line Z = 0 of the working chart: points (1, x, 0).
  Poly gT = G.partial(0).dehomogenize_at(0).coeff_x(0);
  Poly gX = G.partial(1).dehomogenize_at(0).coeff_x(0);
  Poly gZ = G.partial(2).dehomogenize_at(0).coeff_x(0);
  Poly pinf = gcd_all({gT, gX, gZ});
  if (pinf.degree() > 0) {
    auto xs = k_roots(pinf);
    require_rational_roots(pinf, xs, "singular point");
    for (const auto& x0 : xs) pts.emplace_back(M.apply({1, x0, 0}));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (const auto& p : pts) out.push_back({p, point_kind(F, p)});
  return out;
}

int fulton_multiplicity(const BiPoly& f0, const BiPoly& g0) {
  BiPoly f = f0, g = g0;
  int acc = 0;
  for (int guard = 0; guard < 100000; ++guard) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("common component through the point");
    if (!f.eval(0, 0).is_zero() || !g.eval(0, 0).is_zero()) return acc;
    Poly r = f.coeff_x(0), s = g.coeff_x(0);  // restrictions to x = 0, as polynomials in t
    if (r.degree() > s.degree()) {
      std::swap(f, g);
      std::swap(r, s);
    }
    if (r.is_zero()) {
      if (s.is_zero()) throw PreconditionError("common component through the point");
      // f = x*h: I(f, g) = I(x, g) + I(h, g)
      acc += s.ord0();
      std::vector<Poly> h(f.coeffs().begin() + 1, f.coeffs().end());
      f = BiPoly(std::move(h));
      continue;
    }
    std::vector<Poly> shift{Poly::monomial(s.lc(), s.degree() - r.degree())};
    g = g * BiPoly(Poly(r.lc())) - f * BiPoly(shift);
  }
  throw IntegrityError("Fulton recursion did not terminate");
}

int intersection_multiplicity(const TriForm& f, const TriForm& g, const PlanePoint& p) {
  return fulton_multiplicity(local_equation(f, p), local_equation(g, p));
}

TriForm tangent_line(const TriForm& f, const PlanePoint& p) {
  Vec3 grad;
  for (int k = 0; k < 3; ++k) grad[k] = f.partial(k).eval(p.coords());
  if (grad[0].is_zero() && grad[1].is_zero() && grad[2].is_zero())
    throw PreconditionError("tangent line requested at a singular point");
  return TriForm::linear(grad);
}

TriForm cremona_transform(const TriForm& f, const std::array<TriForm, 3>& triangle) {
  std::array<Vec3, 3> rows;
  for (int k = 0; k < 3; ++k) {
    if (triangle[k].degree() != 1) throw PreconditionError("triangle members must be lines");
    rows[k] = {triangle[k].coeff({1, 0, 0}), triangle[k].coeff({0, 1, 0}), triangle[k].coeff({0, 0, 1})};
  }
  Matrix3 A(rows);
  if (A.det().is_zero()) throw PreconditionError("triangle lines are concurrent");
  TriForm moved = f.substitute(A.inverse());
  TriForm T = TriForm::var(0), X = TriForm::var(1), Z = TriForm::var(2);
  TriForm q = moved.substitute({X * Z, T * Z, T * X});
  Exp3 removed;
  return q.strip_monomial(removed);
}

TangentCase classify_tangent_case(const PlaneCurve& q, const PlanePoint& z) {
  const TriForm& F = q.form();
  if (!q.contains(z)) throw PreconditionError("point is not on the curve");
  if (point_kind(F, z) != SingularityKind::Smooth) throw PreconditionError("tangent case needs a smooth point");
  TriForm l = tangent_line(F, z);
  Vec3 g{l.coeff({1, 0, 0}), l.coeff({0, 1, 0}), l.coeff({0, 0, 1})};
  // Second point w on l.
  Vec3 w;
  bool found = false;
  for (int k = 0; k < 3 && !found; ++k) {
    Vec3 e{0, 0, 0};
    e[k] = 1;
    Vec3 c{g[1] * e[2] - g[2] * e[1], g[2] * e[0] - g[0] * e[2], g[0] * e[1] - g[1] * e[0]};
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
    if (PlanePoint(c) == z) continue;
    w = c;
    found = true;
  }
  if (!found) throw IntegrityError("could not parametrize the tangent line");
  // q(z + m w) as a polynomial in m.
  Poly restricted;
  for (const auto& [e, c] : F.terms()) {
    Poly term(c);
    for (int k = 0; k < 3; ++k) term *= pow(Poly(std::vector<FieldElem>{z[k], w[k]}), e[k]);
    restricted += term;
  }
  if (restricted.is_zero()) throw PreconditionError("the tangent line is a component");
  int iz = restricted.ord0();
  if (iz >= 4) return TangentCase::B;
  auto sing = singular_points(q);
  for (const auto& s : sing) {
    if (!l.eval(s.point.coords()).is_zero()) continue;
    if (s.kind == SingularityKind::Cusp) return TangentCase::SC;
    if (s.kind == SingularityKind::Node) return TangentCase::SN;
  }
  Poly rest = restricted / Poly::monomial(1, iz);
  int at_w = F.degree() - restricted.degree();
  bool tangent_elsewhere = at_w >= 2;
  if (rest.degree() > 0)
    for (const auto& sf : squarefree_decomposition(rest))
      if (sf.multiplicity >= 2) tangent_elsewhere = true;
  return tangent_elsewhere ? TangentCase::B : TangentCase::S;
}

}  // namespace wcc
