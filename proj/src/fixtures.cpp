#include "wcc/fixtures.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "wcc/errors.hpp"
#include "wcc/parse.hpp"

namespace wcc {

void FixtureData::merge(const FixtureData& b) {
  for (auto& [k, v] : b.curves) curves[k] = v;
  for (auto& [k, v] : b.points) points[k] = v;
  for (auto& [k, v] : b.matrices) matrices[k] = v;
  for (auto& [k, v] : b.sections) sections[k] = v;
  for (auto& [k, v] : b.arrangements) arrangements[k] = v;
}

Section parse_section(const std::string& text) {
  if (trim(text) == "O") return Section::zero();
  auto [x, y] = parse_pair(text);
  return Section(x, y);
}

FixtureData parse_fixture(const std::string& text) {
  FixtureData out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected `name: value`");
    std::string head = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    std::string kind = "curve", name = head;
    auto space = head.find_first_of(" \t");
    if (space != std::string::npos) {
      kind = head.substr(0, space);
      name = trim(head.substr(space));
    }
    if (name.empty() || name.find_first_of(" \t,+") != std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": bad name `" + name + "`");
    try {
      if (kind == "curve") {
        out.curves[name] = parse_form(value);
      } else if (kind == "point") {
        out.points[name] = PlanePoint(parse_point(value));
      } else if (kind == "matrix") {
        out.matrices[name] = parse_matrix(value);
      } else if (kind == "section") {
        out.sections[name] = parse_section(value);
      } else if (kind == "arrangement") {
        std::vector<std::string> parts;
        std::stringstream ss(value);
        std::string part;
        while (std::getline(ss, part, '+')) {
          part = trim(part);
          if (part.empty()) throw ParseError("empty component");
          parts.push_back(part);
        }
        out.arrangements[name] = parts;
      } else {
        throw ParseError("unknown kind `" + kind + "`");
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const PreconditionError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

FixtureData read_fixture_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PreconditionError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_fixture(ss.str());
}

template <class Map>
static const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw PreconditionError(std::string("unknown ") + what + " `" + name + "`");
  return it->second;
}

PlaneCurve WorkedExample::curve(const std::string& name) const {
  return PlaneCurve(lookup(data.curves, name, "curve"), name);
}

Section WorkedExample::section(const std::string& name) const { return lookup(data.sections, name, "section"); }

PlanePoint WorkedExample::point(const std::string& name) const { return lookup(data.points, name, "point"); }

std::vector<PlaneCurve> WorkedExample::arrangement(const std::string& name) const {
  std::vector<PlaneCurve> out;
  for (auto& c : lookup(data.arrangements, name, "arrangement")) out.push_back(curve(c));
  return out;
}

HeightContext WorkedExample::heights() const {
  Section p1 = section("P1");
  return HeightContext::build(model, &p1);
}

namespace {

struct Checker {
  WorkedExample& ex;

  void operator()(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      throw IntegrityError("fixture identity failed: " + name + " (" + e.what() + ")");
    }
    if (!ok) throw IntegrityError("fixture identity failed: " + name);
    ex.identities.push_back(name);
  }
};

bool same_up_to_sign(const Section& a, const Section& b) { return a == b || a == neg(b); }

}  // namespace

WorkedExample load_worked_example_from_text(const std::string& text) {
  WorkedExample ex;
  ex.data = parse_fixture(text);
  Checker check{ex};
  auto& d = ex.data;
  auto form = [&](const std::string& n) { return lookup(d.curves, n, "curve"); };

  std::array<TriForm, 3> tri;
  check("the triangle lines are not concurrent", [&] {
    tri = {form("tri1"), form("tri2"), form("tri3")};
    std::array<Vec3, 3> rows;
    for (int k = 0; k < 3; ++k)
      rows[k] = {tri[k].eval({1, 0, 0}), tri[k].eval({0, 1, 0}), tri[k].eval({0, 0, 1})};
    return !Matrix3(rows).det().is_zero();
  });
  check("quadratic transform of C equals Q", [&] { return cremona_transform(form("C"), tri).proportional(form("Q")); });
  check("quadratic transform of L equals CQ", [&] { return cremona_transform(form("L"), tri).proportional(form("CQ")); });

  PlanePoint z0 = ex.point("z0");
  check("z0 lies on Q and CQ", [&] { return PlaneCurve(form("Q")).contains(z0) && PlaneCurve(form("CQ")).contains(z0); });
  check("lz0 is the tangent line of Q at z0", [&] { return tangent_line(form("Q"), z0).proportional(form("lz0")); });
  check("lz0 meets Q in two further points (case s)",
        [&] { return classify_tangent_case(PlaneCurve(form("Q")), z0) == TangentCase::S; });

  Matrix3 phi = lookup(d.matrices, "Phi", "matrix");
  check("Phi sends z0 to [0,1,0] and lz0 to Z = 0", [&] {
    if (phi.det().is_zero()) return false;
    bool point_ok = PlanePoint(phi.apply(z0.coords())) == PlanePoint(Vec3{0, 1, 0});
    return point_ok && form("lz0").substitute(phi.inverse()).proportional(TriForm::var(2));
  });
  check("Phi(Q) equals phiQ", [&] { return form("Q").substitute(phi.inverse()).proportional(form("phiQ")); });
  check("Phi(CQ) equals phiC", [&] { return form("CQ").substitute(phi.inverse()).proportional(form("phiC")); });

  check("phiQ has nodes x1, x2 and a cusp at y", [&] {
    ex.singular = singular_points(PlaneCurve(form("phiQ")));
    std::vector<SingularPoint> expect = {{ex.point("x1"), SingularityKind::Node},
                                         {ex.point("x2"), SingularityKind::Node},
                                         {ex.point("y"), SingularityKind::Cusp}};
    if (ex.singular.size() != expect.size()) return false;
    for (auto& e : expect) {
      bool found = false;
      for (auto& s : ex.singular) found = found || (s.point == e.point && s.kind == e.kind);
      if (!found) return false;
    }
    return true;
  });

  check("phiQ reads as a Weierstrass model", [&] {
    ex.model = WeierstrassModel::from_quartic(form("phiQ"));
    return true;
  });
  for (auto& [name, s] : d.sections)
    check(name + " satisfies the Weierstrass equation", [&] { return on_curve(ex.model, s); });

  auto sec = [&](const std::string& n) { return ex.section(n); };
  check("P0 = P2 - P1", [&] { return sub(ex.model, sec("P2"), sec("P1")) == sec("P0"); });
  for (auto [s, c] : {std::pair{"P1", "L1"}, {"P2", "L2"}, {"P3", "L3"}, {"P0", "Cbar"}})
    check(std::string(c) + " is the curve of " + s,
          [&] { return section_to_plane_curve(sec(s)).form().proportional(form(c)); });
  check("phiC equals Cbar", [&] { return form("phiC").proportional(form("Cbar")); });
  for (auto [s, c] : {std::pair{"P1", "C1"}, {"P2", "C2"}, {"P0", "C0"}}) {
    std::string doubled = std::string("2") + s;
    check("[2]" + std::string(s) + " equals " + doubled + " up to sign",
          [&] { return same_up_to_sign(mul(ex.model, 2, sec(s)), sec(doubled)); });
    check(std::string(c) + " is the curve of [2]" + s,
          [&] { return section_to_plane_curve(sec(doubled)).form().proportional(form(c)); });
  }
  check("arrangement components are known curves", [&] {
    for (auto& [name, parts] : d.arrangements)
      for (auto& p : parts)
        if (!d.curves.count(p)) return false;
    return true;
  });
  return ex;
}

WorkedExample load_worked_example() { return load_worked_example_from_text(worked_example_text()); }

}  // namespace wcc
