#include "wcc/zariski.hpp"

#include <map>
#include <sstream>

#include "wcc/errors.hpp"

namespace wcc {

std::vector<Section> case_one_basis(const WorkedExample& ex) {
  return {ex.section("P1"), ex.section("P2"), ex.section("P3")};
}

namespace {

// Role of each fiber of the context: the singular point of phiQ it comes
// from, with the node on L1 as the first node.
std::vector<FiberRole> fiber_roles(const WorkedExample& ex, const HeightContext& ctx) {
  PlaneCurve l1 = ex.curve("L1");
  std::vector<FiberRole> roles;
  for (const auto& f : ctx.fibers) {
    if (f.at_infinity) {
      roles.push_back(FiberRole::Infinity);
      continue;
    }
    const SingularPoint* hit = nullptr;
    for (const auto& s : ex.singular)
      if (!s.point[2].is_zero() && s.point[0] == f.location) hit = &s;
    if (!hit) throw IntegrityError("reducible fiber at t = " + f.location_name() + " has no singular point");
    if (hit->kind == SingularityKind::Cusp)
      roles.push_back(FiberRole::Cusp);
    else
      roles.push_back(l1.contains(hit->point) ? FiberRole::Node1 : FiberRole::Node2);
  }
  return roles;
}

bool psi_matches(const CaseLattice& lat, const LatticeVector& v, const std::vector<FiberRole>& roles,
                 const std::vector<int>& surface_psi) {
  std::vector<int> lp = lat.psi(v);
  for (size_t k = 0; k < lat.fibers().size(); ++k) {
    bool found = false;
    for (size_t j = 0; j < roles.size(); ++j)
      if (roles[j] == lat.fibers()[k].role) {
        found = true;
        if (surface_psi[j] != lp[k]) return false;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace

std::vector<RealizedConic> realize_case_one(const WorkedExample& ex) {
  CaseLattice lat = CaseLattice::get("I");
  HeightContext ctx = ex.heights();
  auto roles = fiber_roles(ex, ctx);
  auto basis = case_one_basis(ex);
  PlaneCurve q = ex.curve("phiQ");
  std::vector<RealizedConic> out;
  for (int type = 1; type <= 6; ++type) {
    if (!target_height(lat, type)) continue;
    for (const auto& v : vectors_for_type(lat, type)) {
      RealizedConic r;
      r.type = type;
      r.coords = v;
      r.name = lat.name(v);
      r.section = combination(ex.model, basis, v);
      PlaneCurve c = section_to_plane_curve(r.section);
      r.curve = c.form();
      auto cert = is_weak_contact(q, c);
      r.weak_contact = cert.weak_contact;
      r.bezout_total = cert.data.bezout_total;
      SingSubset s = sing_on_curve(ex.singular, c);
      r.geometric_type = type_of(s.nodes, s.cusp);
      r.psi_agrees = psi_matches(lat, v, roles, ctx.psi(r.section));
      out.push_back(std::move(r));
    }
  }
  return out;
}

namespace {

struct PairSpec {
  const char* id;
  const char* first;
  const char* second;
  const char* s1;
  const char* s2;
  const char* shape;
};

const PairSpec kPairs[] = {
    {"B11-B21", "B11", "B21", "P1", "P2", "line"},  {"B22-B12", "B22", "B12", "P2", "P1", "line"},
    {"B11-B12", "B11", "B12", "P1", "P2", "conic"}, {"B11-B10", "B11", "B10", "P1", "P0", "conic"},
    {"B22-B21", "B22", "B21", "P2", "P1", "conic"}, {"B22-B20", "B22", "B20", "P2", "P0", "conic"},
    {"D0-D1", "D0", "D1", "P0", "P1", "conic"},     {"D0-D2", "D0", "D2", "P0", "P2", "conic"},
};

std::string vec_text(const LatticeVector& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

bool same_components(const std::vector<PlaneCurve>& got, const std::vector<TriForm>& want) {
  if (got.size() != want.size()) return false;
  for (size_t k = 0; k < got.size(); ++k)
    if (!got[k].form().proportional(want[k])) return false;
  return true;
}

}  // namespace

std::vector<std::string> zariski_pair_ids() {
  std::vector<std::string> out;
  for (const auto& p : kPairs) out.push_back(p.id);
  return out;
}

bool ZariskiReport::hypotheses_pass() const {
  for (const auto& h : hypotheses)
    if (!h.pass) return false;
  return true;
}

std::vector<std::string> ZariskiReport::lines() const {
  std::vector<std::string> out;
  out.push_back("pair: " + id + " (" + first + ", " + second + ")");
  out.push_back("s1: " + s1 + " " + vec_text(c1));
  out.push_back("s2: " + s2 + " " + vec_text(c2));
  out.push_back("shape: " + shape);
  for (const auto& h : hypotheses)
    out.push_back(std::string(h.pass ? "pass" : "fail") + ": " + h.name + (h.detail.empty() ? "" : " [" + h.detail + "]"));
  out.push_back(std::string("combinatorics: fingerprints ") +
                (fingerprints_equal ? "equal (necessary conditions verified)" : "differ"));
  out.push_back("conclusion: " + conclusion);
  return out;
}

ZariskiReport zariski_pair_report(const WorkedExample& ex, const std::string& id) {
  const PairSpec* spec = nullptr;
  for (const auto& p : kPairs)
    if (id == p.id) spec = &p;
  if (!spec) throw PreconditionError("unknown pair `" + id + "`");

  ZariskiReport r;
  r.id = spec->id;
  r.first = spec->first;
  r.second = spec->second;
  r.s1 = spec->s1;
  r.s2 = spec->s2;
  r.shape = spec->shape;

  const WeierstrassModel& m = ex.model;
  HeightContext ctx = ex.heights();
  auto basis = case_one_basis(ex);
  Section s1 = ex.section(r.s1), s2 = ex.section(r.s2);
  Section d1 = mul(m, 2, s1), d2 = mul(m, 2, s2);

  auto coords = [&](const Section& s, const std::string& what) {
    auto c = lattice_coordinates(ctx, basis, s);
    if (!c) throw IntegrityError(what + " is not an integer combination of P1, P2, P3");
    return *c;
  };
  r.c1 = coords(s1, r.s1);
  r.c2 = coords(s2, r.s2);
  LatticeVector e1 = coords(d1, "[2]" + r.s1);

  TriForm q = ex.data.curves.at("phiQ");
  TriForm f1 = section_to_plane_curve(s1).form(), f2 = section_to_plane_curve(s2).form();
  TriForm g1 = section_to_plane_curve(d1).form(), g2 = section_to_plane_curve(d2).form();
  auto first = ex.arrangement(r.first), second = ex.arrangement(r.second);
  bool line_shape = r.shape == "line";
  std::vector<TriForm> want_second = line_shape ? std::vector<TriForm>{q, f2, g1} : std::vector<TriForm>{q, f1, g2};
  r.hypotheses.push_back({"components of " + r.first + " are Q, f(s1), f([2]s1)",
                          same_components(first, {q, f1, g1}), ""});
  r.hypotheses.push_back({"components of " + r.second + " are " +
                              (line_shape ? "Q, f(s2), f([2]s1)" : "Q, f(s1), f([2]s2)"),
                          same_components(second, want_second), ""});

  r.hypotheses.push_back({"s1 and [2]s1 are dependent", integer_rank({r.c1, e1}) == 1,
                          "[2]s1 = " + vec_text(e1)});
  if (line_shape)
    r.hypotheses.push_back({"s2 and [2]s1 are independent", integer_rank({r.c2, e1}) == 2, ""});
  else
    r.hypotheses.push_back({"s1 and s2 are independent", integer_rank({r.c1, r.c2}) == 2, ""});
  auto divisors = smith_divisors({r.c1, r.c2});
  std::string dtext;
  for (const auto& d : divisors) dtext += (dtext.empty() ? "" : ",") + d.get_str();
  r.hypotheses.push_back({"s1, s2 extend to a basis", check_basis_extension(r.c1, r.c2), "divisors " + dtext});

  PlaneCurve qc(q, "phiQ");
  std::map<std::string, bool> conics;
  for (const auto* arr : {&first, &second})
    for (size_t k = 1; k < arr->size(); ++k)
      if ((*arr)[k].degree() == 2) conics[(*arr)[k].name()] = is_weak_contact(qc, (*arr)[k]).weak_contact;
  bool all_weak = true;
  std::string names;
  for (const auto& [n, ok] : conics) {
    all_weak = all_weak && ok;
    names += (names.empty() ? "" : ",") + n;
  }
  r.hypotheses.push_back({"conics are weak contact conics of Q", all_weak, names});

  r.fingerprint_first = arrangement_fingerprint(first);
  r.fingerprint_second = arrangement_fingerprint(second);
  r.fingerprints_equal = r.fingerprint_first == r.fingerprint_second;
  r.conclusion =
      "no homeomorphism of the plane takes " + r.first + " to " + r.second + " fixing Q (cited, not proved)";
  return r;
}

}  // namespace wcc
