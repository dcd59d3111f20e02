#include "wcc/roots.hpp"

#include <algorithm>
#include <set>

#include "wcc/errors.hpp"

namespace wcc {

namespace {

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt inv_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), mod(a, m).get_mpz_t(), m.get_mpz_t()) == 0)
    throw PreconditionError("not invertible modulo prime power");
  return r;
}

BigInt rat_mod(const Rational& q, const BigInt& m) {
  return mod(q.get_num() * inv_mod(q.get_den(), m), m);
}

// Images of K in Z/P for the four sign choices (a, b): sqrt2 -> a*s, i -> b*j.
struct Embedding {
  int a, b;
};
const Embedding kEmb[4] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};

BigInt embed(const FieldElem& c, const Embedding& e, const BigInt& s, const BigInt& j, const BigInt& m) {
  BigInt r = rat_mod(c[0], m) + e.a * rat_mod(c[1], m) * s + e.b * rat_mod(c[2], m) * j +
             e.a * e.b * rat_mod(c[3], m) * s * j;
  return mod(r, m);
}

using ModPoly = std::vector<BigInt>;

BigInt eval_mod(const ModPoly& p, const BigInt& x, const BigInt& m) {
  BigInt r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = mod(r * x + *it, m);
  return r;
}

ModPoly deriv_mod(const ModPoly& p, const BigInt& m) {
  ModPoly r;
  for (size_t k = 1; k < p.size(); ++k) r.push_back(mod(p[k] * static_cast<unsigned long>(k), m));
  return r;
}

void trim_mod(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// gcd over the prime field Z/p; returns its degree.
int gcd_degree_mod(ModPoly a, ModPoly b, const BigInt& p) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    BigInt li = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
      BigInt f = mod(a.back() * li, p);
      size_t off = a.size() - b.size();
      for (size_t k = 0; k < b.size(); ++k) a[off + k] = mod(a[off + k] - f * b[k], p);
      trim_mod(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

BigInt sqrt_mod_prime(long a, long p) {
  long am = ((a % p) + p) % p;
  for (long x = 1; x < p; ++x)
    if ((x * x) % p == am) return BigInt(x);
  throw PreconditionError("no square root modulo prime");
}

// Newton iteration from a simple root modulo p up to modulus m = p^e.
BigInt hensel(const ModPoly& f, const ModPoly& df, BigInt x, const BigInt& m) {
  for (int it = 0; it < 200; ++it) {
    BigInt v = eval_mod(f, x, m);
    if (v == 0) return x;
    x = mod(x - v * inv_mod(eval_mod(df, x, m), m), m);
  }
  throw IntegrityError("Hensel lifting did not converge");
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::vector<FieldElem> k_roots(const Poly& input) {
  if (input.is_zero()) throw PreconditionError("roots of the zero polynomial");
  Poly g = squarefree_part(input);
  int d = g.degree();
  std::vector<FieldElem> out;
  if (d <= 0) return out;
  if (d == 1) return {-g.coeff(0)};

  // Denominator M and root-size bound B on the coordinates of 2*M*r.
  BigInt M = 1;
  Rational maxsum = 0;
  for (int k = 0; k < d; ++k) {
    Rational sum = 0;
    FieldElem c = g.coeff(k);
    for (int q = 0; q < 4; ++q) {
      mpz_lcm(M.get_mpz_t(), M.get_mpz_t(), c[q].get_den().get_mpz_t());
      sum += abs(c[q]);
    }
    maxsum = std::max(maxsum, sum);
  }
  Rational R = 1 + 2 * maxsum;
  Rational Bq = 2 * M * R;
  BigInt B = Bq.get_num() / Bq.get_den() + 1;

  for (long p = 17; p < 200000; p += 8) {
    if (!is_prime(p)) continue;
    BigInt P(p);
    if (M % P == 0) continue;
    BigInt s0 = sqrt_mod_prime(2, p), j0 = sqrt_mod_prime(-1, p);

    // Squarefree in every embedding modulo p?
    bool ok = true;
    for (const auto& e : kEmb) {
      ModPoly f;
      for (int k = 0; k <= d; ++k) f.push_back(embed(g.coeff(k), e, s0, j0, P));
      if (gcd_degree_mod(f, deriv_mod(f, P), P) != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    BigInt mod_e = P;
    while (mod_e <= 2 * B + 1) mod_e *= P;
    ModPoly sq{mod(BigInt(-2), mod_e), 0, 1}, sqm{1, 0, 1};
    BigInt s = hensel(sq, deriv_mod(sq, mod_e), s0, mod_e);
    BigInt j = hensel(sqm, deriv_mod(sqm, mod_e), j0, mod_e);

    std::array<std::vector<BigInt>, 4> lifted;
    for (int ei = 0; ei < 4; ++ei) {
      ModPoly f, fp;
      for (int k = 0; k <= d; ++k) {
        f.push_back(embed(g.coeff(k), kEmb[ei], s, j, mod_e));
        fp.push_back(embed(g.coeff(k), kEmb[ei], s0, j0, P));
      }
      ModPoly df = deriv_mod(f, mod_e);
      for (long x = 0; x < p; ++x)
        if (eval_mod(fp, BigInt(x), P) == 0) lifted[ei].push_back(hensel(f, df, BigInt(x), mod_e));
      if (lifted[ei].empty()) return out;  // a K-root would show up in every embedding
    }

    BigInt inv4 = inv_mod(BigInt(4), mod_e);
    BigInt scale = mod(2 * M, mod_e);
    BigInt k1 = mod(scale * inv4 * inv_mod(s, mod_e), mod_e);
    BigInt k2 = mod(scale * inv4 * inv_mod(j, mod_e), mod_e);
    BigInt k3 = mod(scale * inv4 * inv_mod(s * j, mod_e), mod_e);
    BigInt k0 = mod(scale * inv4, mod_e);
    BigInt half = mod_e / 2;
    auto sym = [&](const BigInt& v, BigInt& outv) {
      BigInt r = mod(v, mod_e);
      if (r > half) r -= mod_e;
      outv = r;
      return abs(r) <= B;
    };

    std::set<FieldElem> found;
    for (const auto& r0 : lifted[0])
      for (const auto& r1 : lifted[1])
        for (const auto& r2 : lifted[2])
          for (const auto& r3 : lifted[3]) {
            // embeddings: (1,1), (-1,1), (1,-1), (-1,-1)
            BigInt n0, n1, n2, n3;
            if (!sym(k0 * (r0 + r1 + r2 + r3), n0)) continue;
            if (!sym(k1 * (r0 - r1 + r2 - r3), n1)) continue;
            if (!sym(k2 * (r0 + r1 - r2 - r3), n2)) continue;
            if (!sym(k3 * (r0 - r1 - r2 + r3), n3)) continue;
            BigInt den = 2 * M;
            FieldElem cand(make_rational(n0, den), make_rational(n1, den), make_rational(n2, den),
                           make_rational(n3, den));
            if (g.eval(cand).is_zero()) found.insert(cand);
          }
    out.assign(found.begin(), found.end());
    return out;
  }
  throw PreconditionError("no suitable prime for root recovery");
}

bool field_sqrt(const FieldElem& a, FieldElem& root) {
  if (a.is_zero()) {
    root = FieldElem();
    return true;
  }
  if (a.is_rational() && a[0] > 0) {
    BigInt n = a[0].get_num(), dd = a[0].get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(dd.get_mpz_t())) {
      root = FieldElem(make_rational(sqrt(n), sqrt(dd)));
      return true;
    }
  }
  auto r = k_roots(Poly(std::vector<FieldElem>{-a, 0, 1}));
  for (const auto& x : r)
    if (x.lead_sign() > 0) {
      root = x;
      return true;
    }
  return false;
}

}  // namespace wcc
