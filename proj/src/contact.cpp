#include <algorithm>
#include <map>
#include <sstream>

#include "wcc/errors.hpp"
#include "wcc/planecurve.hpp"
#include "wcc/resultant.hpp"
#include "wcc/roots.hpp"

namespace wcc {

namespace {

// Working charts: T -> T + aX, X -> X + kT, Z -> Z + bX. The pure shears
// (a = b = 0) come first; moving the center is needed when (0,1,0) lies on
// one of the curves.
std::vector<Matrix3> chart_list() {
  std::vector<Matrix3> out;
  const long shears[] = {0, 1, -1, 2, -2, 3, -3};
  const std::pair<long, long> centers[] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1},
                                           {1, -1}, {-1, 1}, {2, 1}, {1, 2}, {-2, 3}, {3, -2}};
  for (const auto& [a, b] : centers)
    for (long k : shears) {
      if (a * k == 1) continue;
      out.emplace_back(std::array<Vec3, 3>{Vec3{1, a, 0}, Vec3{k, 1, 0}, Vec3{0, b, 1}});
    }
  return out;
}

BiPoly first_subresultant(const BiPoly& f, const BiPoly& g) {
  if (std::min(f.deg_x(), g.deg_x()) == 1) return f.deg_x() == 1 ? f : g;
  return subresultant(f, g, 1);
}

// x-coordinate of the unique common point over the roots of h: -s10/s11 mod h.
Poly x_mod(const BiPoly& s1, const Poly& h) {
  return (-s1.coeff_x(0) * inverse_mod(s1.coeff_x(1), h)) % h;
}

}  // namespace

IntersectionData intersect_curves(const TriForm& F, const TriForm& G) {
  int total = F.degree() * G.degree();
  IntersectionData fallback_data;
  bool have_fallback = false;
  BiPoly fallback_f, fallback_g;
  for (const auto& M : chart_list()) {
    Vec3 center = M.apply({0, 1, 0});
    if (F.eval(center).is_zero() || G.eval(center).is_zero()) continue;
    BiPoly f = F.substitute(M).dehomogenize();
    BiPoly g = G.substitute(M).dehomogenize();
    Poly R = resultant(f, g);
    if (R.is_zero()) throw PreconditionError("curves share a component");
    if (R.degree() != total) continue;  // intersection on the line at infinity
    BiPoly s1 = first_subresultant(f, g);
    Poly s11 = s1.coeff_x(1);
    IntersectionData d;
    d.chart = M;
    d.resultant = R;
    d.x_solution = s1;
    d.certified = !s11.is_zero() && gcd(squarefree_part(R), s11).degree() == 0;
    if (d.certified) {
      for (const auto& sf : squarefree_decomposition(R)) {
        IntersectionClass c{sf.factor, sf.multiplicity, {}, false};
        for (const auto& t0 : k_roots(sf.factor)) {
          FieldElem x0 = -s1.coeff_x(0).eval(t0) / s11.eval(t0);
          c.points.emplace_back(M.apply({t0, x0, 1}));
        }
        d.bezout_total += sf.factor.degree() * sf.multiplicity;
        d.classes.push_back(std::move(c));
      }
      if (d.bezout_total != total) throw IntegrityError("Bezout audit failed");
      // Cross-check each K-rational point with Fulton's algorithm.
      for (const auto& c : d.classes)
        for (const auto& p : c.points)
          if (intersection_multiplicity(F, G, p) != c.multiplicity)
            throw IntegrityError("resultant multiplicity disagrees with Fulton at " + p.to_string());
      return d;
    }
    if (!have_fallback) {
      fallback_data = d;
      fallback_f = f;
      fallback_g = g;
      have_fallback = true;
    }
  }
  if (!have_fallback) throw PreconditionError("no admissible projection chart");

  // No chart separated the points: split off the uncertified roots, which
  // must then be K-rational, and treat them point by point.
  IntersectionData d = fallback_data;
  const BiPoly& s1 = d.x_solution;
  Poly s11 = s1.coeff_x(1);
  for (const auto& sf : squarefree_decomposition(d.resultant)) {
    Poly bad = s11.is_zero() ? sf.factor : gcd(sf.factor, s11);
    Poly good = sf.factor / bad;
    if (good.degree() > 0) {
      IntersectionClass c{good, sf.multiplicity, {}, false};
      for (const auto& t0 : k_roots(good)) {
        FieldElem x0 = -s1.coeff_x(0).eval(t0) / s11.eval(t0);
        c.points.emplace_back(d.chart.apply({t0, x0, 1}));
      }
      d.bezout_total += good.degree() * sf.multiplicity;
      d.classes.push_back(std::move(c));
    }
    if (bad.degree() <= 0) continue;
    auto ts = k_roots(bad);
    if (static_cast<int>(ts.size()) != bad.degree()) throw PreconditionError("non-K-rational intersection points");
    for (const auto& t0 : ts) {
      Poly common = gcd(fallback_f.at_t(t0), fallback_g.at_t(t0));
      auto xs = k_roots(common);
      if (static_cast<int>(xs.size()) != squarefree_part(common).degree())
        throw PreconditionError("non-K-rational intersection points");
      for (const auto& x0 : xs) {
        PlanePoint p(d.chart.apply({t0, x0, 1}));
        int m = intersection_multiplicity(F, G, p);
        d.classes.push_back({Poly::linear_root(t0), m, {p}, true});
        d.bezout_total += m;
      }
    }
  }
  if (d.bezout_total != total) throw IntegrityError("Bezout audit failed");
  return d;
}

ContactCertificate is_weak_contact(const PlaneCurve& q, const PlaneCurve& c) {
  if (c.degree() != 2) throw PreconditionError("weak contact test needs a conic");
  if (!singular_points(c).empty()) throw PreconditionError("conic is not smooth");
  ContactCertificate cert;
  cert.data = intersect_curves(q.form(), c.form());
  cert.weak_contact = true;
  for (const auto& cl : cert.data.classes)
    if (cl.multiplicity % 2) cert.weak_contact = false;
  return cert;
}

std::vector<std::string> ContactCertificate::lines() const {
  std::vector<std::string> out;
  for (const auto& c : data.classes) {
    std::ostringstream s;
    s << "class factor=" << c.factor.to_string() << " degree=" << c.factor.degree() << " multiplicity=" << c.multiplicity
      << " parity=" << (c.multiplicity % 2 ? "odd" : "even");
    if (!c.points.empty()) {
      s << " points=";
      for (size_t k = 0; k < c.points.size(); ++k) s << (k ? ";" : "") << c.points[k].to_string();
    }
    if (c.via_fulton) s << " method=fulton";
    out.push_back(s.str());
  }
  std::sort(out.begin(), out.end());
  out.push_back("bezout_total=" + std::to_string(data.bezout_total));
  out.push_back(std::string("weak_contact=") + (weak_contact ? "true" : "false"));
  return out;
}

SingSubset sing_on_curve(const std::vector<SingularPoint>& sing, const PlaneCurve& c) {
  SingSubset s;
  for (const auto& p : sing) {
    if (!c.contains(p.point)) continue;
    if (p.kind == SingularityKind::Node) ++s.nodes;
    if (p.kind == SingularityKind::Cusp) s.cusp = true;
  }
  return s;
}

namespace {

std::string component_label(const PlaneCurve& c, const std::vector<SingularPoint>& sing) {
  std::vector<std::string> kinds;
  for (const auto& s : sing) kinds.push_back(kind_name(s.kind));
  std::sort(kinds.begin(), kinds.end());
  std::string out = "deg" + std::to_string(c.degree()) + "[";
  for (size_t k = 0; k < kinds.size(); ++k) out += (k ? "," : "") + kinds[k];
  return out + "]";
}

}  // namespace

std::string Fingerprint::text() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

Fingerprint arrangement_fingerprint(const std::vector<PlaneCurve>& comps) {
  size_t n = comps.size();
  std::vector<std::vector<SingularPoint>> sing(n);
  std::vector<std::string> label(n);
  for (size_t k = 0; k < n; ++k) {
    sing[k] = singular_points(comps[k]);
    label[k] = component_label(comps[k], sing[k]);
  }
  Fingerprint fp;
  for (size_t k = 0; k < n; ++k) fp.lines.push_back("component " + label[k]);

  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      size_t a = i, b = j;
      if (label[b] < label[a]) std::swap(a, b);
      IntersectionData d = intersect_curves(comps[a].form(), comps[b].form());
      // One line per intersection point, so K-rationality of the points
      // does not leak into the record.
      auto describe = [&](int mult, const std::string& kinds, const std::vector<std::string>& meets) {
        std::string s = "pair " + label[a] + "|" + label[b] + " multiplicity=" + std::to_string(mult) +
                        " kinds=" + kinds + " meets=[";
        for (size_t k = 0; k < meets.size(); ++k) s += (k ? "," : "") + meets[k];
        fp.lines.push_back(s + "]");
      };
      for (const auto& cl : d.classes) {
        for (const auto& p : cl.points) {
          std::string kinds = kind_name(point_kind(comps[a].form(), p)) + "/" + kind_name(point_kind(comps[b].form(), p));
          std::vector<std::string> meets;
          for (size_t h = 0; h < n; ++h)
            if (h != a && h != b && comps[h].contains(p)) meets.push_back(label[h]);
          std::sort(meets.begin(), meets.end());
          describe(cl.multiplicity, kinds, meets);
        }
        Poly rest = cl.factor;
        for (const auto& p : cl.points) {
          Vec3 w = d.chart.inverse().apply(p.coords());
          rest = rest / Poly::linear_root(w[0] / w[2]);
        }
        if (rest.degree() <= 0) continue;
        // Split the remaining points by which other components pass through them.
        Poly xr = x_mod(d.x_solution, rest);
        std::vector<std::pair<Poly, std::vector<std::string>>> parts{{rest, {}}};
        for (size_t h = 0; h < n; ++h) {
          if (h == a || h == b) continue;
          BiPoly hh = comps[h].form().substitute(d.chart).dehomogenize();
          std::vector<std::pair<Poly, std::vector<std::string>>> next;
          for (auto& [f, meets] : parts) {
            Poly val;
            for (int e = hh.deg_x(); e >= 0; --e) val = (val * xr + hh.coeff_x(e)) % f;
            Poly on = val.is_zero() ? f.monic() : gcd(f, val);
            Poly off = f / on;
            if (on.degree() > 0) {
              auto m = meets;
              m.push_back(label[h]);
              next.push_back({on, m});
            }
            if (off.degree() > 0) next.push_back({off, meets});
          }
          parts = std::move(next);
        }
        // Singular points of every component are K-rational, so these are smooth on both.
        for (auto& [f, meets] : parts) {
          std::sort(meets.begin(), meets.end());
          for (int k = 0; k < f.degree(); ++k) describe(cl.multiplicity, "smooth/smooth", meets);
        }
      }
    }
  std::sort(fp.lines.begin(), fp.lines.end());
  return fp;
}

}  // namespace wcc
