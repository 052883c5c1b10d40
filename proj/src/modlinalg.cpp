#include "fuchs/modlinalg.hpp"

#include "fuchs/error.hpp"
#include "fuchs/numeric.hpp"

#include <algorithm>

namespace fuchs::modp {

namespace {

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

}  // namespace

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& f, const Poly& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = (out[i + j] + mulmod(f[i], g[j], p)) % p;
  }
  trim(out);
  return out;
}

namespace {

// Quotient and remainder of f by nonzero g.
void divmod(Poly f, const Poly& g, std::uint64_t p, Poly& quot, Poly& rem) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t inv_lead = invmod(g.back(), p);
  quot.assign(f.size() >= g.size() ? f.size() - dg : 0, 0);
  while (f.size() >= g.size()) {
    const std::uint64_t c = mulmod(f.back(), inv_lead, p);
    const std::size_t shift = f.size() - g.size();
    quot[shift] = c;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = sub(f[shift + i], mulmod(c, g[i], p), p);
    trim(f);
  }
  rem = std::move(f);
}

}  // namespace

Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  Poly q, r;
  divmod(std::move(f), g, p, q, r);
  return r;
}

Poly poly_div(Poly f, const Poly& g, std::uint64_t p) {
  Poly q, r;
  divmod(std::move(f), g, p, q, r);
  return q;
}

Poly poly_gcd(Poly f, Poly g, std::uint64_t p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = poly_mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    const std::uint64_t inv_lead = invmod(f.back(), p);
    for (auto& c : f) c = mulmod(c, inv_lead, p);
  }
  return f;
}

Poly poly_powmod(Poly base, std::uint64_t exponent, const Poly& modulus, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), modulus, p);
  while (exponent > 0) {
    if (exponent & 1U) result = poly_mod(poly_mul(result, base, p), modulus, p);
    exponent >>= 1U;
    if (exponent > 0) base = poly_mod(poly_mul(base, base, p), modulus, p);
  }
  return result;
}

std::uint64_t poly_eval(const Poly& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (mulmod(acc, x, p) + f[i]) % p;
  return acc;
}

Poly charpoly(Mat h, std::uint64_t p) {
  const std::size_t n = h.size();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 <= n; ++col) {
    std::size_t pivot = col + 1;
    while (pivot < n && h[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != col + 1) {
      std::swap(h[pivot], h[col + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][col + 1]);
    }
    const std::uint64_t inv = invmod(h[col + 1][col], p);
    for (std::size_t r = col + 2; r < n; ++r) {
      const std::uint64_t factor = mulmod(h[r][col], inv, p);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = sub(h[r][c], mulmod(factor, h[col + 1][c], p), p);
      for (std::size_t rr = 0; rr < n; ++rr) h[rr][col + 1] = (h[rr][col + 1] + mulmod(factor, h[rr][r], p)) % p;
    }
  }
  // p_m(x) = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}, zero-based below.
  std::vector<Poly> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly cur = poly_mul({(p - h[m - 1][m - 1]) % p, 1}, polys[m - 1], p);
    cur.resize(m + 1, 0);
    std::uint64_t prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = mulmod(prod, h[i + 1][i], p);
      if (prod == 0) break;
      const std::uint64_t coef = mulmod(h[i][m - 1], prod, p);
      for (std::size_t t = 0; t < polys[i].size(); ++t) cur[t] = sub(cur[t], mulmod(coef, polys[i][t], p), p);
    }
    trim(cur);
    polys[m] = std::move(cur);
  }
  return polys[n];
}

namespace {

void split_roots(const Poly& g, std::uint64_t p, std::vector<std::uint64_t>& out) {
  const std::size_t deg = g.size() - 1;
  if (deg == 0) return;
  if (deg == 1) {
    out.push_back(mulmod(p - g[0], invmod(g[1], p), p));
    return;
  }
  for (std::uint64_t a = 0; a < p; ++a) {
    Poly h = poly_powmod({a, 1}, (p - 1) / 2, g, p);
    if (h.empty()) h = {0};
    h[0] = sub(h[0], 1, p);
    trim(h);
    Poly d = poly_gcd(g, h, p);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(d, p, out);
      split_roots(poly_div(g, d, p), p, out);
      return;
    }
  }
  fail(ErrorKind::SplitFailed, "root splitting did not terminate");
}

}  // namespace

std::vector<std::uint64_t> roots(const Poly& f_in, std::uint64_t p) {
  Poly f = f_in;
  trim(f);
  if (f.size() <= 1) return {};
  std::vector<std::uint64_t> out;
  if (f[0] == 0) {
    out.push_back(0);
    while (!f.empty() && f[0] == 0) f.erase(f.begin());
  }
  if (f.size() > 1) {
    Poly xp = poly_powmod({0, 1}, p, f, p);
    xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
    xp[1] = sub(xp[1], 1, p);
    trim(xp);
    const Poly g = poly_gcd(f, xp, p);
    if (g.size() > 1) split_roots(g, p, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> reduce_basis(std::vector<Vec> rows, std::uint64_t p, std::vector<std::size_t>& pivots) {
  pivots.clear();
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = invmod(rows[rank][col], p);
    for (auto& v : rows[rank]) v = mulmod(v, inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint64_t factor = rows[r][col];
      for (std::size_t c = 0; c < n; ++c) rows[r][c] = sub(rows[r][c], mulmod(factor, rows[rank][c], p), p);
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::vector<Vec> kernel(Mat m, std::uint64_t p) {
  const std::size_t rows = m.size();
  if (rows == 0) return {};
  const std::size_t cols = m[0].size();
  std::vector<std::size_t> pivots;
  m = reduce_basis(std::move(m), p, pivots);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fuchs::modp
