#include "wcc/reports.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"
#include "wcc/errors.hpp"
#include "wcc/mwlattice.hpp"
#include "wcc/parse.hpp"
#include "wcc/zariski.hpp"

namespace wcc {

using nlohmann::json;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "structured") return Format::Structured;
  throw ParseError("unknown format `" + s + "`");
}

namespace {

std::string q(const Rational& r) { return to_string(r); }

std::string vec_text(const LatticeVector& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

json matrix_json(const RatMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(q(v));
    out.push_back(r);
  }
  return out;
}

std::string matrix_text(const RatMatrix& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.size(); ++i) {
    s += i ? ", [" : "[";
    for (size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + q(m[i][j]);
    s += "]";
  }
  return s + "]";
}

json section_json(const Section& s) {
  if (s.is_zero()) return "O";
  return json{{"x", s.x().to_string()}, {"y", s.y().to_string()}};
}

Report finish(const json& j, const std::string& text, Format f, int status = 0) {
  if (f == Format::Structured) return {j.dump(2) + "\n", status};
  return {text, status};
}

struct CheckList {
  json items = json::array();
  std::string text;
  bool all = true;
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    all = all && pass;
    json item{{"name", name}, {"pass", pass}};
    if (!detail.empty()) item["detail"] = detail;
    items.push_back(item);
    text += std::string(pass ? "pass" : "FAIL") + ": " + name + (detail.empty() ? "" : " [" + detail + "]") + "\n";
  }
};

long parse_long(const std::string& s) {
  try {
    size_t used = 0;
    long v = std::stol(trim(s), &used);
    if (used == trim(s).size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("expected an integer, got `" + s + "`");
}

bool is_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// Splits at top-level + and -, keeping the sign with each term.
std::vector<std::pair<int, std::string>> split_terms(const std::string& s) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0, sign = 1;
  std::string cur;
  auto flush = [&] {
    std::string t = trim(cur);
    if (!t.empty()) out.push_back({sign, t});
    else if (!out.empty() || sign < 0) throw ParseError("empty term in section expression `" + s + "`");
    cur.clear();
  };
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      if (!trim(cur).empty() || !out.empty()) flush();
      sign = c == '-' ? -1 : 1;
      continue;
    }
    cur += c;
  }
  flush();
  if (out.empty()) throw ParseError("empty section expression");
  return out;
}

}  // namespace

void Session::set_fixture_text(std::string text) {
  fixture_text_ = std::move(text);
  example_.reset();
}

void Session::add_input(const std::string& path) { extra_.merge(read_fixture_file(path)); }

const WorkedExample& Session::example() {
  if (!example_)
    example_ = std::make_unique<WorkedExample>(
        load_worked_example_from_text(fixture_text_ ? *fixture_text_ : worked_example_text()));
  return *example_;
}

TriForm Session::resolve_curve(const std::string& text) {
  std::string t = trim(text);
  if (auto it = extra_.curves.find(t); it != extra_.curves.end()) return it->second;
  if (is_name(t) && parse_fixture(fixture_text_ ? *fixture_text_ : worked_example_text()).curves.count(t))
    return example().data.curves.at(t);
  return parse_form(t);
}

Section Session::resolve_section(const std::string& text, const WeierstrassModel& m) {
  std::string t = trim(text);
  if (t == "O") return Section::zero();
  if (!t.empty() && t.front() == '(') return parse_section(t);
  auto named = [&](const std::string& n) -> Section {
    if (n == "O") return Section::zero();
    if (auto it = extra_.sections.find(n); it != extra_.sections.end()) return it->second;
    if (example().data.sections.count(n)) return example().section(n);
    throw PreconditionError("unknown section `" + n + "`");
  };
  Section acc;
  for (auto [sign, term] : split_terms(t)) {
    long k = 1;
    std::string name = term;
    if (!is_name(term) || !(extra_.sections.count(term) || example().data.sections.count(term))) {
      if (term.front() == '[') {
        auto close = term.find(']');
        if (close == std::string::npos) throw ParseError("unclosed multiplier in `" + term + "`");
        k = parse_long(term.substr(1, close - 1));
        name = trim(term.substr(close + 1));
      } else if (auto star = term.find('*'); star != std::string::npos) {
        k = parse_long(term.substr(0, star));
        name = trim(term.substr(star + 1));
      } else if (term.front() == '(') {
        acc = add(m, acc, mul(m, sign, parse_section(term)));
        continue;
      }
    }
    if (!is_name(name)) throw ParseError("bad section term `" + term + "`");
    acc = add(m, acc, mul(m, sign * k, named(name)));
  }
  return acc;
}

WeierstrassModel Session::model_for(const std::string& quartic) {
  if (quartic == "phiQ" && !extra_.curves.count("phiQ")) return example().model;
  return WeierstrassModel::from_quartic(resolve_curve(quartic));
}

Report Session::verify_example(Format f) {
  const WorkedExample& ex = example();
  CheckList checks;
  for (const auto& id : ex.identities) checks.add(id, true);

  FiberReport fr = classify_fibers(ex.model);
  std::string got;
  int euler = fr.residual_euler;
  for (const auto& fib : fr.fibers) {
    got += (got.empty() ? "" : " ") + fib.location_name() + ":" + fib.type_name();
    euler += fib.euler();
  }
  checks.add("reducible fibers", got == "-1:I2 0:IV 1:I2 inf:I2", got);
  checks.add("irreducible fibers carry Euler number 2", fr.residual_euler == 2);
  checks.add("Euler numbers sum to 12", euler == 12, std::to_string(euler));

  HeightContext ctx = ex.heights();
  auto basis = case_one_basis(ex);
  RatMatrix gram = gram_matrix(ctx, basis);
  RatMatrix expect = {{Rational(1, 3), Rational(1, 6), 0}, {Rational(1, 6), Rational(1, 3), 0}, {0, 0, Rational(1, 2)}};
  checks.add("Gram matrix of P1, P2, P3", gram == expect, matrix_text(gram));
  Section d1 = mul(ex.model, 2, ex.section("P1"));
  checks.add("height of [2]P1 is 4/3", wcc::height(ctx, d1, d1) == Rational(4, 3));
  checks.add("height of P0 is 1/3", wcc::height(ctx, ex.section("P0"), ex.section("P0")) == Rational(1, 3));

  CaseLattice lat = CaseLattice::get("I");
  PlaneCurve q = ex.curve("phiQ");
  for (const char* name : {"Cbar", "C0", "C1", "C2"}) {
    PlaneCurve c = ex.curve(name);
    auto cert = is_weak_contact(q, c);
    SingSubset s = sing_on_curve(ex.singular, c);
    int type = type_of(s.nodes, s.cusp);
    auto [sp, sm] = plane_curve_to_sections(ex.model, c.form());
    auto coords = lattice_coordinates(ctx, basis, sp);
    bool lattice_ok = coords && matches_type(lat, *coords, type);
    checks.add(std::string(name) + " is a weak contact conic of type " + std::to_string(type),
               cert.weak_contact && cert.data.bezout_total == 8 && lattice_ok,
               "bezout " + std::to_string(cert.data.bezout_total) + ", lattice " + (coords ? vec_text(*coords) : "none"));
  }
  auto generic = is_weak_contact(q, PlaneCurve(parse_form("x = t^2 + 1")));
  checks.add("x = t^2 + 1 is not a weak contact conic", !generic.weak_contact);

  auto realized = realize_case_one(ex);
  bool all_ok = true;
  for (const auto& r : realized) all_ok = all_ok && r.ok();
  checks.add("every Case I lattice vector gives a weak contact conic of its type", all_ok,
             std::to_string(realized.size()) + " conics");

  json j{{"checks", checks.items}, {"pass", checks.all}};
  return finish(j, checks.text + (checks.all ? "all checks passed\n" : "some checks FAILED\n"), f, checks.all ? 0 : 3);
}

Report Session::fibers(const std::string& quartic, Format f) {
  WeierstrassModel m = model_for(quartic);
  FiberReport fr = classify_fibers(m);
  std::ostringstream text;
  json list = json::array();
  int euler = fr.residual_euler;
  text << "model: " << m.to_string() << "\n";
  text << "discriminant: " << m.discriminant().to_string() << "\n";
  for (const auto& fib : fr.fibers) {
    euler += fib.euler();
    text << "fiber t=" << fib.location_name() << ": " << fib.type_name() << " components=" << fib.components()
         << " euler=" << fib.euler() << "\n";
    list.push_back({{"location", fib.location_name()},
                    {"type", fib.type_name()},
                    {"components", fib.components()},
                    {"euler", fib.euler()}});
  }
  text << "irreducible fibers: euler=" << fr.residual_euler << "\n";
  text << "euler total: " << euler << "\n";
  json j{{"model", m.to_string()},
         {"discriminant", m.discriminant().to_string()},
         {"fibers", list},
         {"residual_euler", fr.residual_euler},
         {"euler_total", euler}};
  return finish(j, text.str(), f);
}

Report Session::height(const std::vector<std::string>& names, const std::string& quartic, Format f) {
  if (names.empty()) throw ParseError("height needs at least one section");
  bool own = quartic == "phiQ" && !extra_.curves.count("phiQ");
  WeierstrassModel m = model_for(quartic);
  HeightContext ctx = own ? example().heights() : HeightContext::build(m);
  std::vector<Section> secs;
  for (const auto& n : names) {
    Section s = resolve_section(n, m);
    if (!on_curve(m, s)) throw PreconditionError("section `" + n + "` is not on the model");
    secs.push_back(s);
  }
  RatMatrix g(secs.size(), std::vector<Rational>(secs.size()));
  for (size_t i = 0; i < secs.size(); ++i)
    for (size_t k = i; k < secs.size(); ++k) g[i][k] = g[k][i] = wcc::height(ctx, secs[i], secs[k]);
  std::ostringstream text;
  json j{{"sections", names}, {"gram", matrix_json(g)}};
  if (secs.size() == 1) {
    text << "height <" << names[0] << ", " << names[0] << "> = " << q(g[0][0]) << "\n";
    j["height"] = q(g[0][0]);
  } else {
    for (size_t i = 0; i < secs.size(); ++i)
      for (size_t k = i; k < secs.size(); ++k)
        text << "<" << names[i] << ", " << names[k] << "> = " << q(g[i][k]) << "\n";
    text << "gram: " << matrix_text(g) << "\n";
    text << "determinant: " << q(determinant(g)) << "\n";
    j["determinant"] = q(determinant(g));
  }
  return finish(j, text.str(), f);
}

Report Session::group_op(const std::string& op, const std::vector<std::string>& args, const std::string& quartic,
                         Format f) {
  WeierstrassModel m = model_for(quartic);
  auto need = [&](size_t n) {
    if (args.size() != n) throw ParseError("group-op " + op + " takes " + std::to_string(n) + " operand(s)");
  };
  auto sec = [&](const std::string& s) {
    Section p = resolve_section(s, m);
    if (!on_curve(m, p)) throw PreconditionError("section `" + s + "` is not on the model");
    return p;
  };
  Section r;
  if (op == "add") {
    need(2);
    r = add(m, sec(args[0]), sec(args[1]));
  } else if (op == "sub") {
    need(2);
    r = sub(m, sec(args[0]), sec(args[1]));
  } else if (op == "neg") {
    need(1);
    r = neg(sec(args[0]));
  } else if (op == "double") {
    need(1);
    r = mul(m, 2, sec(args[0]));
  } else if (op == "mul") {
    need(2);
    r = mul(m, parse_long(args[0]), sec(args[1]));
  } else {
    throw ParseError("unknown group operation `" + op + "`");
  }
  std::ostringstream text;
  json j{{"op", op}, {"operands", args}, {"result", section_json(r)}};
  if (r.is_zero()) {
    text << "result: O\n";
  } else {
    text << "x: " << r.x().to_string() << "\n";
    text << "y: " << r.y().to_string() << "\n";
    if (r.in_stratum()) {
      std::string c = "x = " + r.x().to_string();
      text << "curve: " << c << "\n";
      j["curve"] = c;
    }
  }
  return finish(j, text.str(), f);
}

Report Session::enumerate(const std::string& case_id, std::optional<int> type, Format f) {
  CaseLattice lat = CaseLattice::get(case_id);
  if (type && (*type < 1 || *type > 6)) throw ParseError("type must be 1..6");
  std::ostringstream text;
  json types = json::array();
  text << "case " << lat.id() << " gram " << matrix_text(lat.gram()) << "\n";
  for (int t = 1; t <= 6; ++t) {
    if (type && *type != t) continue;
    auto h = target_height(lat, t);
    if (!h) {
      if (type) throw PreconditionError("type " + std::to_string(t) + " does not occur in case " + case_id);
      text << "type " << t << ": not admissible\n";
      types.push_back({{"type", t}, {"admissible", false}});
      continue;
    }
    auto vs = vectors_for_type(lat, t);
    text << "type " << t << ": height " << q(*h) << ", " << vs.size() << " conic(s)\n";
    json elems = json::array();
    for (const auto& v : vs) {
      text << "  " << lat.name(v) << "  " << vec_text(v) << "\n";
      elems.push_back({{"name", lat.name(v)}, {"coords", v}});
    }
    types.push_back({{"type", t}, {"admissible", true}, {"height", q(*h)}, {"count", vs.size()}, {"elements", elems}});
  }
  json j{{"case", lat.id()}, {"gram", matrix_json(lat.gram())}, {"types", types}};
  return finish(j, text.str(), f);
}

Report Session::main_theorem(Format f) {
  std::ostringstream text;
  json rows = json::object();
  text << "case   n1 n2 n3 n4 n5 n6\n";
  for (const auto& id : CaseLattice::ids()) {
    auto row = classify_and_count(CaseLattice::get(id));
    std::string label = "(" + id + ")";
    text << label << std::string(6 - label.size(), ' ');
    for (int n : row) text << " " << std::string(n < 10 ? 1 : 0, ' ') << n;
    text << "\n";
    rows[id] = row;
  }
  return finish(json{{"rows", rows}}, text.str(), f);
}

Report Session::weak_contact(const std::string& quartic, const std::string& conic, Format f) {
  PlaneCurve qc(resolve_curve(quartic), quartic);
  PlaneCurve cc(resolve_curve(conic), conic);
  if (qc.degree() != 4) throw PreconditionError("the first curve must be a quartic");
  auto cert = is_weak_contact(qc, cc);
  SingSubset s = sing_on_curve(singular_points(qc), cc);
  int type = type_of(s.nodes, s.cusp);
  std::ostringstream text;
  text << "weak_contact: " << (cert.weak_contact ? "true" : "false") << "\n";
  text << "type: " << type << "\n";
  for (const auto& l : cert.lines()) text << "certificate: " << l << "\n";
  json j{{"weak_contact", cert.weak_contact},
         {"type", type},
         {"bezout_total", cert.data.bezout_total},
         {"certified_chart", cert.data.certified},
         {"certificate", cert.lines()}};
  return finish(j, text.str(), f);
}

Report Session::cremona(const std::string& curve, const std::vector<std::string>& triangle, Format f) {
  std::array<TriForm, 3> tri;
  if (triangle.empty()) {
    for (int k = 0; k < 3; ++k) tri[k] = resolve_curve("tri" + std::to_string(k + 1));
  } else if (triangle.size() == 3) {
    for (int k = 0; k < 3; ++k) tri[k] = resolve_curve(triangle[k]);
  } else {
    throw ParseError("a triangle needs three lines");
  }
  TriForm r = cremona_transform(resolve_curve(curve), tri).normalized();
  std::ostringstream text;
  text << "image: " << r.to_string() << "\n";
  text << "degree: " << r.degree() << "\n";
  json j{{"image", r.to_string()}, {"degree", r.degree()}};
  return finish(j, text.str(), f);
}

Report Session::zariski(const std::string& pair, Format f) {
  std::vector<std::string> ids = pair == "all" ? zariski_pair_ids() : std::vector<std::string>{pair};
  const WorkedExample& ex = example();
  std::string text;
  json list = json::array();
  for (const auto& id : ids) {
    ZariskiReport r = zariski_pair_report(ex, id);
    for (const auto& l : r.lines()) text += l + "\n";
    text += "\n";
    json hyp = json::array();
    for (const auto& h : r.hypotheses) hyp.push_back({{"name", h.name}, {"pass", h.pass}, {"detail", h.detail}});
    list.push_back({{"pair", r.id},
                    {"first", r.first},
                    {"second", r.second},
                    {"s1", r.s1},
                    {"s2", r.s2},
                    {"s1_coords", r.c1},
                    {"s2_coords", r.c2},
                    {"shape", r.shape},
                    {"hypotheses", hyp},
                    {"hypotheses_pass", r.hypotheses_pass()},
                    {"fingerprints_equal", r.fingerprints_equal},
                    {"conclusion", r.conclusion}});
  }
  if (!text.empty()) text.pop_back();
  return finish(json{{"pairs", list}}, text, f);
}

Report Session::fingerprint(const std::vector<std::string>& components, Format f) {
  std::vector<std::string> names = components;
  if (names.size() == 1) {
    const std::string& a = names[0];
    if (auto it = extra_.arrangements.find(a); it != extra_.arrangements.end())
      names = it->second;
    else if (is_name(a) && example().data.arrangements.count(a))
      names = example().data.arrangements.at(a);
  }
  std::vector<PlaneCurve> comps;
  for (const auto& n : names) comps.emplace_back(resolve_curve(n), n);
  Fingerprint fp = arrangement_fingerprint(comps);
  return finish(json{{"components", names}, {"fingerprint", fp.lines}}, fp.text(), f);
}

}  // namespace wcc
