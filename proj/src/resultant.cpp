#include "wcc/resultant.hpp"

#include "wcc/errors.hpp"

namespace wcc {

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, computed in K[t][x].
BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
  int db = b.deg_x();
  const Poly& lb = b.coeff_x(db);
  int e = a.deg_x() - db + 1;
  while (!a.is_zero() && a.deg_x() >= db) {
    int da = a.deg_x();
    Poly la = a.coeff_x(da);
    std::vector<Poly> shift(da - db + 1);
    shift[da - db] = la;
    a *= lb;
    a -= b * BiPoly(std::move(shift));
    --e;
  }
  if (e > 0) a *= pow(lb, e);
  return a;
}

BiPoly div_exact(BiPoly a, const Poly& d) {
  std::vector<Poly> r;
  for (const auto& c : a.coeffs()) r.push_back(c / d);
  return BiPoly(std::move(r));
}

}  // namespace

Poly resultant(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  BiPoly a = p, b = q;
  Poly sign(1);
  if (a.deg_x() < b.deg_x()) {
    std::swap(a, b);
    if (a.deg_x() % 2 && b.deg_x() % 2) sign = -sign;
  }
  if (b.deg_x() == 0) return sign * pow(b.coeff_x(0), a.deg_x());
  Poly g(1), h(1);
  while (true) {
    int delta = a.deg_x() - b.deg_x();
    if (a.deg_x() % 2 && b.deg_x() % 2) sign = -sign;
    BiPoly r = pseudo_remainder(a, b);
    a = b;
    if (r.is_zero()) return Poly();
    b = div_exact(r, g * pow(h, delta));
    g = a.coeff_x(a.deg_x());
    if (delta == 0) {
      // h unchanged
    } else {
      h = pow(g, delta) / pow(h, delta - 1);
    }
    if (b.deg_x() == 0) {
      int da = a.deg_x();
      Poly res = pow(b.coeff_x(0), da);
      if (da > 1) res = res / pow(h, da - 1);
      return sign * res;
    }
  }
}

Poly det_bareiss(std::vector<std::vector<Poly>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return Poly(1);
  Poly sign(1), prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int sw = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          sw = i;
          break;
        }
      if (sw < 0) return Poly();
      std::swap(m[k], m[sw]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Rows of the subresultant matrix: shifted coefficient lists, highest power first.
std::vector<std::vector<Poly>> subres_rows(const BiPoly& p, const BiPoly& q, int j, int& cols) {
  int m = p.deg_x(), n = q.deg_x();
  cols = m + n - j;
  std::vector<std::vector<Poly>> rows;
  auto add_rows = [&](const BiPoly& f, int deg, int count) {
    for (int s = count - 1; s >= 0; --s) {
      std::vector<Poly> row(cols);
      // f * x^s: coefficient of x^(deg + s - k) placed at column (cols - 1) - (deg + s - k)
      for (int k = 0; k <= deg; ++k) row[cols - 1 - (k + s)] = f.coeff_x(k);
      rows.push_back(std::move(row));
    }
  };
  add_rows(p, m, n - j);
  add_rows(q, n, m - j);
  return rows;
}

}  // namespace

Poly resultant_sylvester(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  int cols = 0;
  auto rows = subres_rows(p, q, 0, cols);
  return det_bareiss(rows);
}

BiPoly subresultant(const BiPoly& p, const BiPoly& q, int j) {
  int m = p.deg_x(), n = q.deg_x();
  if (j < 0 || j >= std::min(m, n)) throw PreconditionError("subresultant index out of range");
  int cols = 0;
  auto rows = subres_rows(p, q, j, cols);
  int nr = static_cast<int>(rows.size());
  std::vector<Poly> out(j + 1);
  for (int k = 0; k <= j; ++k) {
    std::vector<std::vector<Poly>> sq(nr, std::vector<Poly>(nr));
    for (int r = 0; r < nr; ++r) {
      for (int c = 0; c < nr - 1; ++c) sq[r][c] = rows[r][c];
      sq[r][nr - 1] = rows[r][cols - 1 - k];
    }
    out[k] = det_bareiss(sq);
  }
  return BiPoly(std::move(out));
}

std::vector<BiPoly> subresultant_chain(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) throw PreconditionError("subresultant chain of zero");
  BiPoly a = p, b = q;
  if (a.deg_x() < b.deg_x()) std::swap(a, b);
  std::vector<BiPoly> chain{a, b};
  for (int j = b.deg_x() - 1; j >= 0; --j) chain.push_back(subresultant(a, b, j));
  return chain;
}

}  // namespace wcc
