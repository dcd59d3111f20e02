#include "wcc/mwlattice.hpp"

#include <algorithm>
#include <map>

#include "wcc/errors.hpp"

namespace wcc {

std::string role_name(FiberRole r) {
  switch (r) {
    case FiberRole::Node1: return "node1";
    case FiberRole::Node2: return "node2";
    case FiberRole::Cusp: return "cusp";
    case FiberRole::Infinity: return "inf";
  }
  return "?";
}

int CaseFiber::components() const {
  switch (type) {
    case Kodaira::In: return n;
    case Kodaira::II: return 1;
    case Kodaira::III: return 2;
    case Kodaira::IV: return 3;
  }
  return 1;
}

namespace {

RatMatrix rat_matrix(std::initializer_list<std::initializer_list<const char*>> rows) {
  RatMatrix m;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (const char* s : r) {
      Rational q(s);
      q.canonicalize();
      row.push_back(q);
    }
    m.push_back(row);
  }
  return m;
}

CaseFiber I(FiberRole r, int n, std::vector<int> psi) { return {r, Kodaira::In, n, std::move(psi)}; }

}  // namespace

CaseLattice::CaseLattice(std::string id, RatMatrix gram, std::vector<CaseFiber> fibers, std::vector<std::string> names)
    : id_(std::move(id)), gram_(std::move(gram)), fibers_(std::move(fibers)), names_(std::move(names)) {
  if (!is_positive_definite(gram_)) throw IntegrityError("case " + id_ + ": Gram matrix not positive definite");
  for (int k = 0; k < rank(); ++k) {
    LatticeVector e(rank(), 0);
    e[k] = 1;
    if (height_from_psi(e) != gram_[k][k])
      throw IntegrityError("case " + id_ + ": component data disagree with the height of " + names_[k]);
  }
}

// Component incidence per case. Fibers are listed as node x1, node x2, cusp,
// infinity; a singular point absorbed by the fiber at infinity has no entry.
CaseLattice CaseLattice::get(const std::string& id) {
  using R = FiberRole;
  if (id == "I")
    return CaseLattice("I", rat_matrix({{"1/3", "1/6", "0"}, {"1/6", "1/3", "0"}, {"0", "0", "1/2"}}),
                       {I(R::Node1, 2, {1, 0, 1}), I(R::Node2, 2, {0, 1, 1}), I(R::Cusp, 3, {1, 2, 0}),
                        I(R::Infinity, 2, {1, 1, 1})},
                       {"P1", "P2", "P3"});
  if (id == "II")
    return CaseLattice("II", rat_matrix({{"1/6", "0"}, {"0", "1/6"}}),
                       {I(R::Node1, 2, {1, 0}), I(R::Node2, 2, {0, 1}), I(R::Cusp, 3, {1, 1}),
                        I(R::Infinity, 3, {1, 2})},
                       {"P1", "P2"});
  if (id == "III")
    return CaseLattice("III", rat_matrix({{"1/5", "1/10"}, {"1/10", "3/10"}}),
                       {I(R::Node1, 2, {1, 0}), I(R::Node2, 2, {1, 1}), I(R::Infinity, 5, {1, 3})},
                       {"P1", "P2"});
  if (id == "IV")
    return CaseLattice("IV", rat_matrix({{"1/2", "0"}, {"0", "1/12"}}),
                       {I(R::Node2, 2, {1, 1}), I(R::Cusp, 3, {0, 1}), I(R::Infinity, 4, {2, 1})},
                       {"P3", "P2"});
  throw PreconditionError("unknown case '" + id + "' (expected I, II, III or IV)");
}

const CaseFiber* CaseLattice::fiber(FiberRole r) const {
  for (const auto& f : fibers_)
    if (f.role == r) return &f;
  return nullptr;
}

Rational CaseLattice::pair(const LatticeVector& a, const LatticeVector& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += gram_[i][j] * a[i] * b[j];
  return s;
}

std::vector<int> CaseLattice::psi(const LatticeVector& v) const {
  std::vector<int> out;
  for (const auto& f : fibers_) {
    long m = f.components(), s = 0;
    for (int k = 0; k < rank(); ++k) s += v[k] * f.psi[k];
    out.push_back(static_cast<int>(((s % m) + m) % m));
  }
  return out;
}

Rational CaseLattice::height_from_psi(const LatticeVector& v) const {
  auto p = psi(v);
  Rational h = 2;
  for (size_t k = 0; k < fibers_.size(); ++k) h -= contribution(fibers_[k].type, fibers_[k].n, p[k], p[k]);
  return h;
}

std::string CaseLattice::name(const LatticeVector& v) const {
  std::string out;
  for (int k = 0; k < rank(); ++k) {
    long c = v[k];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    long a = c < 0 ? -c : c;
    if (a != 1) out += "[" + std::to_string(a) + "]";
    out += names_[k];
  }
  return out.empty() ? "O" : out;
}

int type_of(int nodes, bool cusp) {
  if (nodes == 0) return cusp ? 1 : 6;
  if (nodes == 1) return cusp ? 3 : 2;
  return cusp ? 5 : 4;
}

namespace {

// Required roles for a type; types 2 and 3 accept either node.
std::vector<std::vector<FiberRole>> required_roles(int type) {
  using R = FiberRole;
  switch (type) {
    case 1: return {{R::Cusp}};
    case 2: return {{R::Node1}, {R::Node2}};
    case 3: return {{R::Node1, R::Cusp}, {R::Node2, R::Cusp}};
    case 4: return {{R::Node1, R::Node2}};
    case 5: return {{R::Node1, R::Node2, R::Cusp}};
    case 6: return {{}};
  }
  throw PreconditionError("conic type must be 1..6");
}

}  // namespace

std::optional<Rational> target_height(const CaseLattice& c, int type) {
  auto options = required_roles(type);
  // The type is admissible when some option names only fibers the case has.
  for (const auto& roles : options) {
    bool ok = true;
    Rational h = 2;
    for (auto r : roles) {
      const CaseFiber* f = c.fiber(r);
      if (!f) {
        ok = false;
        break;
      }
      // smallest contribution over the nonzero components
      Rational best = -1;
      for (int i = 1; i < f->components(); ++i) {
        Rational v = contribution(f->type, f->n, i, i);
        if (best < 0 || v < best) best = v;
      }
      h -= best;
    }
    if (ok) return h;
  }
  return std::nullopt;
}

bool matches_type(const CaseLattice& c, const LatticeVector& v, int type) {
  auto p = c.psi(v);
  for (const auto& roles : required_roles(type)) {
    bool ok = true;
    for (size_t k = 0; k < c.fibers().size() && ok; ++k) {
      FiberRole r = c.fibers()[k].role;
      bool required = std::find(roles.begin(), roles.end(), r) != roles.end();
      if (required != (p[k] != 0)) ok = false;
    }
    bool available = std::all_of(roles.begin(), roles.end(), [&](FiberRole r) { return c.fiber(r) != nullptr; });
    if (ok && available) return true;
  }
  return false;
}

std::vector<LatticeVector> enumerate_norm_vectors(const CaseLattice& c, const Rational& h) {
  if (h <= 0) throw PreconditionError("target norm must be positive");
  const RatMatrix& g = c.gram();
  int r = c.rank();
  // Lower bound on the smallest eigenvalue.
  Rational lam = -1;
  for (int i = 0; i < r; ++i) {
    Rational v = g[i][i];
    for (int j = 0; j < r; ++j)
      if (j != i) v -= abs(g[i][j]);
    if (lam < 0 || v < lam) lam = v;
  }
  if (lam <= 0) {
    Rational tr = 0;
    for (int i = 0; i < r; ++i) tr += g[i][i];
    Rational p = 1;
    for (int i = 1; i < r; ++i) p *= tr;
    lam = determinant(g) / p;
  }
  Rational bound_sq = h / lam;
  long box = 0;
  while (Rational(box * box) < bound_sq) ++box;

  std::vector<LatticeVector> out;
  LatticeVector v(r, -box);
  while (true) {
    if (c.norm(v) == h) out.push_back(v);
    int k = r - 1;
    while (k >= 0 && v[k] == box) v[k--] = -box;
    if (k < 0) break;
    ++v[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticeVector canonical_sign(LatticeVector v) {
  for (long x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

std::vector<LatticeVector> vectors_for_type(const CaseLattice& c, int type) {
  auto h = target_height(c, type);
  if (!h) return {};
  std::vector<LatticeVector> out;
  for (const auto& v : enumerate_norm_vectors(c, *h))
    if (matches_type(c, v, type) && canonical_sign(v) == v) out.push_back(v);
  return out;
}

std::array<int, 6> classify_and_count(const CaseLattice& c) {
  std::array<int, 6> row{};
  for (int type = 1; type <= 6; ++type) {
    auto h = target_height(c, type);
    if (!h) continue;
    int n = 0;
    for (const auto& v : enumerate_norm_vectors(c, *h))
      if (matches_type(c, v, type)) ++n;
    if (n % 2) throw IntegrityError("enumeration is not symmetric under v -> -v");
    row[type - 1] = n / 2;
  }
  return row;
}

std::vector<BigInt> smith_divisors(const std::vector<LatticeVector>& rows) {
  std::vector<std::vector<BigInt>> a;
  for (const auto& r : rows) {
    std::vector<BigInt> row;
    for (long x : r) row.emplace_back(x);
    a.push_back(row);
  }
  size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<BigInt> out;
  for (size_t t = 0; t < std::min(m, n); ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    while (true) {
      size_t pi = m, pj = n;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) {
        std::sort(out.begin(), out.end());
        return out;
      }
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        BigInt q = a[i][t] / a[t][t];
        for (size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        BigInt q = a[t][j] / a[t][t];
        for (size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the rest of the block.
      bool divides = true;
      for (size_t i = t + 1; i < m && divides; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(abs(a[t][t]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int integer_rank(const std::vector<LatticeVector>& rows) { return static_cast<int>(smith_divisors(rows).size()); }

bool check_basis_extension(const LatticeVector& s1, const LatticeVector& s2) {
  auto d = smith_divisors({s1, s2});
  return d.size() == 2 && d[0] == 1 && d[1] == 1;
}

Section combination(const WeierstrassModel& m, const std::vector<Section>& basis, const LatticeVector& v) {
  if (v.size() != basis.size()) throw PreconditionError("coordinate vector and basis differ in length");
  Section acc;
  for (size_t k = 0; k < v.size(); ++k) acc = add(m, acc, mul(m, v[k], basis[k]));
  return acc;
}

std::optional<LatticeVector> lattice_coordinates(const HeightContext& ctx, const std::vector<Section>& basis,
                                                 const Section& p) {
  size_t r = basis.size();
  RatMatrix a = gram_matrix(ctx, basis);
  for (size_t k = 0; k < r; ++k) a[k].push_back(height(ctx, basis[k], p));
  for (size_t c = 0; c < r; ++c) {
    size_t piv = c;
    while (a[piv][c] == 0) ++piv;  // Gram matrix is definite, so a pivot exists
    std::swap(a[piv], a[c]);
    for (size_t i = 0; i < r; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (size_t j = c; j <= r; ++j) a[i][j] -= f * a[c][j];
    }
  }
  LatticeVector v(r);
  for (size_t k = 0; k < r; ++k) {
    Rational q = a[k][r] / a[k][k];
    if (q.get_den() != 1) return std::nullopt;
    v[k] = q.get_num().get_si();
  }
  if (!(combination(ctx.model, basis, v) == p)) return std::nullopt;
  return v;
}

}  // namespace wcc
