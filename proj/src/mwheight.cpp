#include "wcc/mwheight.hpp"

#include "wcc/errors.hpp"
#include "wcc/roots.hpp"

namespace wcc {

Rational contribution(Kodaira type, int n, int i, int j) {
  if (i == 0 || j == 0) return 0;
  switch (type) {
    case Kodaira::In: {
      if (i > j) std::swap(i, j);
      return make_rational(i * (n - j), n);
    }
    case Kodaira::II: return 0;
    case Kodaira::III: return make_rational(1, 2);
    case Kodaira::IV: return i == j ? make_rational(2, 3) : make_rational(1, 3);
  }
  return 0;
}

Rational contribution(const FiberInfo& f, int i, int j) { return contribution(f.type, f.n, i, j); }

HeightContext HeightContext::build(const WeierstrassModel& m, const Section* designated) {
  HeightContext ctx;
  ctx.model = m;
  FiberReport rep = classify_fibers(m);
  ctx.fibers = rep.fibers;
  ctx.residual_euler = rep.residual_euler;
  if (designated) orient_fibers(m, *designated, ctx.fibers);
  return ctx;
}

std::vector<int> HeightContext::psi(const Section& p) const {
  std::vector<int> out;
  for (const auto& f : fibers) out.push_back(component_index(model, p, f));
  return out;
}

int section_zero_intersection(const Section& p) {
  if (p.is_zero()) throw PreconditionError("(O . O) is not defined by this rule");
  const RatFunc& x = p.x();
  int finite = x.den().degree();
  int at_inf = std::max(0, x.num().degree() - x.den().degree() - 2);
  if (finite % 2 || at_inf % 2) throw IntegrityError("odd pole order in x of a section");
  return finite / 2 + at_inf / 2;
}

namespace {

bool singular_fiber_point(const WeierstrassModel& m, const FieldElem& t0, const FieldElem& x0, const FieldElem& y0) {
  if (!y0.is_zero()) return false;
  Poly c(std::vector<FieldElem>{m.a6().eval(t0), m.a4().eval(t0), m.a2().eval(t0), 1});
  return c.eval(x0).is_zero() && c.derivative().eval(x0).is_zero();
}

// Local order at t = 0 from the classical rule, in a chart where both
// sections are polynomial; -1 when the sections do not meet there or the
// point is singular on its fiber.
int local_rule_at_zero(const WeierstrassModel& m, const Section& p, const Section& q) {
  Poly dx = p.x().num() - q.x().num(), dy = p.y().num() - q.y().num();
  if (!dx.eval(0).is_zero() || !dy.eval(0).is_zero()) return -1;
  FieldElem x0 = p.x().num().eval(0), y0 = p.y().num().eval(0);
  if (singular_fiber_point(m, 0, x0, y0)) return -1;
  if (!y0.is_zero()) return dx.ord0();
  if (dy.is_zero()) throw IntegrityError("sections coincide near a smooth point");
  return dy.ord0();
}

int pole_half(const RatFunc& x, const FieldElem& v) {
  int o = x.ord_at(v);
  return o < 0 ? -o / 2 : 0;
}

void cross_check(const WeierstrassModel& m, const Section& p, const Section& q, const Section& d) {
  Poly dx = p.x().num() - q.x().num(), dy = p.y().num() - q.y().num();
  Poly g = gcd(dx, dy);
  if (g.degree() > 0) {
    for (const auto& t0 : k_roots(g)) {
      Section pl = section_translated(p, t0), ql = section_translated(q, t0);
      int local = local_rule_at_zero(m.translated(t0), pl, ql);
      if (local < 0) continue;
      int via_translation = d.is_zero() ? 0 : pole_half(d.x(), t0);
      if (local != via_translation)
        throw IntegrityError("section intersection routes disagree at t = " + t0.to_string());
    }
  }
  Section pi = section_at_infinity(p), qi = section_at_infinity(q);
  if (pi.in_stratum() && qi.in_stratum()) {
    int local = local_rule_at_zero(m.at_infinity(), pi, qi);
    if (local >= 0) {
      int via_translation = std::max(0, d.x().num().degree() - d.x().den().degree() - 2) / 2;
      if (local != via_translation) throw IntegrityError("section intersection routes disagree at infinity");
    }
  }
}

}  // namespace

int section_intersection(const HeightContext& ctx, const Section& p, const Section& q) {
  if (!p.in_stratum() || !q.in_stratum()) throw PreconditionError("section outside the supported stratum");
  if (p == q) throw PreconditionError("self-intersection is not computed directly");
  Section d = sub(ctx.model, p, q);
  int value = section_zero_intersection(d);
  cross_check(ctx.model, p, q, d);
  return value;
}

Rational height(const HeightContext& ctx, const Section& p, const Section& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  if (!p.in_stratum() || !q.in_stratum()) throw PreconditionError("heights are only computed on the line/conic stratum");
  std::vector<int> ip = ctx.psi(p), iq = ctx.psi(q);
  Rational corr = 0;
  for (size_t k = 0; k < ctx.fibers.size(); ++k) corr += contribution(ctx.fibers[k], ip[k], iq[k]);
  int po = section_zero_intersection(p);
  if (p == q) return 2 + 2 * po - corr;
  int qo = section_zero_intersection(q);
  return 1 + po + qo - section_intersection(ctx, p, q) - corr;
}

RatMatrix gram_matrix(const HeightContext& ctx, const std::vector<Section>& basis) {
  size_t r = basis.size();
  RatMatrix g(r, std::vector<Rational>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i; j < r; ++j) g[i][j] = g[j][i] = height(ctx, basis[i], basis[j]);
  if (!is_positive_definite(g)) throw IntegrityError("Gram matrix is not positive definite");
  return g;
}

Rational determinant(const RatMatrix& g) {
  RatMatrix a = g;
  size_t n = a.size();
  Rational det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

bool is_positive_definite(const RatMatrix& g) {
  for (size_t k = 1; k <= g.size(); ++k) {
    RatMatrix m(k, std::vector<Rational>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) m[i][j] = g[i][j];
    if (determinant(m) <= 0) return false;
  }
  return true;
}

}  // namespace wcc
