#include "fuchs/construct.hpp"

#include "fuchs/error.hpp"

#include <algorithm>
#include <numeric>

namespace fuchs {

BigInt order_gl_q(std::uint64_t n, std::uint64_t q) { return group_order_formula(GroupSpec{GroupFamily::GL, static_cast<std::uint32_t>(n), q}); }

BigInt order_sp_q(std::uint64_t dim, std::uint64_t q) {
  if (dim == 0) return 1;
  return group_order_formula(GroupSpec{GroupFamily::Sp, static_cast<std::uint32_t>(dim), q});
}

BigInt order_so_q(std::uint64_t dim, std::uint64_t q) {
  if (dim <= 1) return 1;
  const std::uint64_t l = dim / 2;
  BigInt out = dim % 2 ? pow_big(q, l * l) : pow_big(q, l * (l - 1)) * (pow_big(q, l) - 1);
  const std::uint64_t top = dim % 2 ? l : l - 1;
  for (std::uint64_t i = 1; i <= top; ++i) out *= pow_big(q, 2 * i) - 1;
  return out;
}

BigInt classical_order(Ambient family, std::uint64_t dim, std::uint64_t q) {
  switch (family) {
    case Ambient::GL: return order_gl_q(dim, q);
    case Ambient::SL: return order_gl_q(dim, q) / (q - 1);
    case Ambient::Sp: return order_sp_q(dim, q);
    case Ambient::SO: return order_so_q(dim, q);
  }
  return 0;
}

std::int64_t algebraic_dimension(Ambient family, std::uint64_t dim) { return ambient_dimension(family, static_cast<int>(dim)); }

namespace {

std::string power_term(const std::string& factor, std::size_t count) {
  return count == 1 ? factor : factor + "^" + std::to_string(count);
}

// "GL_3(7)^2 x GL_2(7)" from descending block sizes.
std::string describe_blocks(const std::vector<int>& blocks, std::uint64_t q) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size();) {
    std::size_t j = i;
    while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
    if (!out.empty()) out += " x ";
    out += power_term("GL_" + std::to_string(blocks[i]) + "(" + std::to_string(q) + ")", j - i);
    i = j;
  }
  return out;
}

BigInt blocks_order(const std::vector<int>& blocks, std::uint64_t q) {
  BigInt out = 1;
  for (int k : blocks) out *= order_gl_q(static_cast<std::uint64_t>(k), q);
  return out;
}

[[noreturn]] void inadmissible(Ambient family, int dim, std::uint64_t m, std::uint64_t q, const std::string& why) {
  fail(ErrorKind::Inadmissible, "(" + ambient_name(family) + ", n=" + std::to_string(dim) + ", m=" + std::to_string(m) + ", q=" +
                                    std::to_string(q) + "): " + why);
}

// Lexicographically least s-subset of {0..m-1} with element sum = target mod m.
std::optional<std::vector<std::uint64_t>> subset_with_sum(std::uint64_t m, std::uint64_t s, std::uint64_t target) {
  std::vector<std::uint64_t> cur;
  std::optional<std::vector<std::uint64_t>> found;
  auto rec = [&](auto&& self, std::uint64_t next, std::uint64_t sum) -> void {
    if (found) return;
    if (cur.size() == s) {
      if (sum % m == target) found = cur;
      return;
    }
    for (std::uint64_t j = next; j + (s - cur.size()) <= m && !found; ++j) {
      cur.push_back(j);
      self(self, j + 1, sum + j);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return found;
}

Matrix antidiagonal_form(const FieldPtr& f, int dim, bool symplectic) {
  Matrix j(f, static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    const bool lower = i >= dim / 2;
    j.set(static_cast<std::size_t>(i), static_cast<std::size_t>(dim - 1 - i), symplectic && lower ? f->neg(f->one()) : f->one());
  }
  return j;
}

ConstructedElement construct_linear(Ambient family, int dim, std::uint64_t m, const FieldPtr& f) {
  const std::uint64_t q = f->order();
  const std::uint64_t n = static_cast<std::uint64_t>(dim);
  if (m == 0 || (q - 1) % m != 0) inadmissible(family, dim, m, q, "m must divide q-1");
  if (n < m) inadmissible(family, dim, m, q, "needs n >= m");
  const FieldElement zeta = root_of_unity(*f, m);
  const std::uint64_t k = n / m;
  const std::uint64_t s = n % m;

  // mult[j]: multiplicity of the eigenvalue zeta^j.
  std::vector<std::uint64_t> mult(m, k);
  bool split = false;
  if (family == Ambient::GL) {
    for (std::uint64_t j = 0; j < s; ++j) ++mult[j];
  } else if (s == 0 && m % 2 == 0 && k % 2 == 1) {
    split = true;
    mult[0] = k + 1;
    mult[m / 2] = k - 1;
  } else {
    const std::uint64_t target = (m % 2 == 0 && k % 2 == 1) ? m / 2 : 0;
    const auto chosen = subset_with_sum(m, s, target);
    if (!chosen) fail(ErrorKind::DeterminantUnfixable, "no eigenvalue assignment with determinant 1");
    for (auto j : *chosen) ++mult[j];
  }

  std::vector<std::uint64_t> order_seq{0};
  if (split) order_seq.push_back(m / 2);
  for (std::uint64_t j = 1; j < m; ++j) {
    if (!(split && j == m / 2)) order_seq.push_back(j);
  }
  std::vector<FieldElement> diag;
  std::vector<std::uint64_t> exps;
  std::vector<int> blocks;
  for (auto j : order_seq) {
    if (mult[j] == 0) continue;
    blocks.push_back(static_cast<int>(mult[j]));
    for (std::uint64_t c = 0; c < mult[j]; ++c) {
      diag.push_back(f->pow(zeta, static_cast<std::int64_t>(j)));
      exps.push_back(j);
    }
  }
  Matrix x = Matrix::diagonal(f, diag);
  if (family == Ambient::SL && x.determinant() != f->one()) fail(ErrorKind::DeterminantUnfixable, "determinant check failed");
  if (matrix_order(x, m) != m) inadmissible(family, dim, m, q, "the diagonal element has order below m");

  std::vector<int> sorted = blocks;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const BigInt cent = blocks_order(sorted, q);
  ConstructedElement e{
      .family = family,
      .dim = dim,
      .m = m,
      .matrix = std::move(x),
      .exponents = std::move(exps),
      .form = std::nullopt,
      .centralizer = make_levi(family, dim, sorted, 0),
      .centralizer_description = describe_blocks(sorted, q),
      .centralizer_order = cent,
      .centralizer_order_in_sl = std::nullopt,
      .bound_exponent = Rational(static_cast<std::int64_t>(n * n)) * (1 - Rational(1, static_cast<std::int64_t>(m))) -
                        static_cast<std::int64_t>(m),
      .split_case = split,
  };
  if (family == Ambient::SL) {
    e.centralizer_order_in_sl = cent / (q - 1);
    e.centralizer_description = "(" + e.centralizer_description + ") & SL";
  }
  return e;
}

ConstructedElement construct_classical(Ambient family, int dim, std::uint64_t m, const FieldPtr& f) {
  const std::uint64_t q = f->order();
  if (m < 3 || m % 2 == 0) inadmissible(family, dim, m, q, "m must be odd and at least 3");
  if ((q - 1) % (2 * m) != 0) inadmissible(family, dim, m, q, "2m must divide q-1");
  if (family == Ambient::Sp && dim % 2 != 0) inadmissible(family, dim, m, q, "Sp needs even dimension");
  const int nu = family == Ambient::SO ? dim % 2 : 0;
  const std::uint64_t two_n = static_cast<std::uint64_t>(dim - nu);
  const std::uint64_t k = two_n / m;
  const std::uint64_t t = two_n % m;
  if (k == 0) inadmissible(family, dim, m, q, "needs 2n >= m");
  const std::uint64_t r = (m - 1) / 2;
  const std::uint64_t fixed = k + t + static_cast<std::uint64_t>(nu);
  const FieldElement zeta = root_of_unity(*f, m);

  // Hyperbolic pairs (e_i, e_{N-1-i}) carry eigenvalues (lambda, lambda^-1); the middle carries 1.
  std::vector<std::uint64_t> exps(static_cast<std::size_t>(dim), 0);
  std::size_t pos = 0;
  for (std::uint64_t i = 1; i <= r; ++i) {
    for (std::uint64_t c = 0; c < k; ++c, ++pos) {
      exps[pos] = i;
      exps[static_cast<std::size_t>(dim) - 1 - pos] = m - i;
    }
  }
  std::vector<FieldElement> diag;
  for (auto j : exps) diag.push_back(f->pow(zeta, static_cast<std::int64_t>(j)));
  Matrix x = Matrix::diagonal(f, diag);
  Matrix form = antidiagonal_form(f, dim, family == Ambient::Sp);
  if (!(x.transpose() * form * x == form)) fail(ErrorKind::Mismatch, "constructed element does not preserve the form");
  if (matrix_order(x, m) != m) inadmissible(family, dim, m, q, "the diagonal element has order below m");

  const std::vector<int> blocks(r, static_cast<int>(k));
  const std::string tail_name = (family == Ambient::Sp ? "Sp_" : "SO_") + std::to_string(fixed) + "(" + std::to_string(q) + ")";
  std::string desc = describe_blocks(blocks, q);
  if (fixed > 0) desc += " x " + tail_name;
  const BigInt cent = blocks_order(blocks, q) * classical_order(family, fixed, q);
  const std::int64_t dim_g = algebraic_dimension(family, static_cast<std::uint64_t>(dim));
  const auto mi = static_cast<std::int64_t>(m);
  return ConstructedElement{
      .family = family,
      .dim = dim,
      .m = m,
      .matrix = std::move(x),
      .exponents = std::move(exps),
      .form = std::move(form),
      .centralizer = make_levi(family, dim, blocks, static_cast<int>(fixed)),
      .centralizer_description = desc,
      .centralizer_order = cent,
      .centralizer_order_in_sl = std::nullopt,
      .bound_exponent = Rational(dim_g) * (1 - Rational(1, mi)) - Rational(mi * mi, 2),
      .split_case = false,
  };
}

// base^e for rational e = a/b compared against value: value^b > base^a.
bool exceeds_power(const BigInt& value, const BigInt& base, const Rational& e) {
  const BigInt a = numerator_of(e);
  const BigInt b = denominator_of(e);
  const std::uint64_t bb = static_cast<std::uint64_t>(b);
  BigInt lhs = pow_big(value, bb);
  BigInt rhs = 1;
  if (a >= 0) rhs = pow_big(base, static_cast<std::uint64_t>(a));
  else lhs *= pow_big(base, static_cast<std::uint64_t>(-a));
  return lhs > rhs;
}

ClassSizeReport finish_report(const ConstructedElement& e, BigInt group_order, BigInt cent, std::string source) {
  ClassSizeReport rep;
  rep.source = std::move(source);
  rep.group_order = group_order;
  rep.centralizer_order = cent;
  rep.class_size = group_order / cent;
  rep.bound_exponent = e.bound_exponent;
  rep.applicable = e.m > 1;
  if (!rep.applicable) return rep;
  const BigInt q = e.matrix.field().order();
  rep.exceeds_exponent_bound = exceeds_power(rep.class_size, q, e.bound_exponent);
  if (e.family == Ambient::GL || e.family == Ambient::SL) {
    rep.exceeds_instance_bound = rep.exceeds_exponent_bound;
  } else {
    // class^(2m) q^(m^3) > |G|^(2(m-1))
    const std::uint64_t m = e.m;
    rep.exceeds_instance_bound = pow_big(rep.class_size, 2 * m) * pow_big(q, m * m * m) > pow_big(group_order, 2 * (m - 1));
  }
  return rep;
}

}  // namespace

ConstructedElement construct_element(Ambient family, int dim, std::uint64_t m, const FieldPtr& field) {
  if (dim < 1) fail(ErrorKind::Inadmissible, "dimension must be positive");
  if (family == Ambient::GL || family == Ambient::SL) return construct_linear(family, dim, m, field);
  return construct_classical(family, dim, m, field);
}

ClassSizeReport class_size_check(const ConstructedElement& e, const GroupTable& group) {
  const auto id = group.index_of(GroupElement::matrix(e.matrix));
  return finish_report(e, BigInt(group.order()), BigInt(centralizer_order(group, id)), "group-scan");
}

ClassSizeReport class_size_check(const ConstructedElement& e) {
  const std::uint64_t q = e.matrix.field().order();
  BigInt cent = e.centralizer_order_in_sl ? *e.centralizer_order_in_sl : e.centralizer_order;
  return finish_report(e, classical_order(e.family, static_cast<std::uint64_t>(e.dim), q), cent, "formula");
}

std::optional<BigInt> commutant_centralizer_order(const Matrix& x, bool det_one, std::uint64_t cap) {
  const Field& f = x.field();
  const std::size_t n = x.dim();
  const std::size_t vars = n * n;
  // Row (i,j) of the system: sum_l X_il x_lj - x_il X_lj = 0.
  std::vector<std::vector<FieldElement>> rows(vars, std::vector<FieldElement>(vars, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto& row = rows[i * n + j];
      for (std::size_t l = 0; l < n; ++l) {
        row[i * n + l] = f.add(row[i * n + l], x(l, j));
        row[l * n + j] = f.sub(row[l * n + j], x(i, l));
      }
    }
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < vars && rank < vars; ++c) {
    std::size_t p = rank;
    while (p < vars && rows[p][c].code == 0) ++p;
    if (p == vars) continue;
    std::swap(rows[p], rows[rank]);
    const FieldElement inv = f.inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = f.mul(v, inv);
    for (std::size_t r = 0; r < vars; ++r) {
      if (r == rank || rows[r][c].code == 0) continue;
      const FieldElement factor = rows[r][c];
      for (std::size_t cc = 0; cc < vars; ++cc) rows[r][cc] = f.sub(rows[r][cc], f.mul(factor, rows[rank][cc]));
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<char> is_pivot(vars, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < vars; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(vars, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(rows[r][free]);
    basis.push_back(std::move(v));
  }
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (total > cap / q) return std::nullopt;
    total *= q;
  }
  const FieldPtr& fp = x.field_ptr();
  BigInt count = 0;
  std::vector<std::uint64_t> digits(basis.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (auto& d : digits) {
      d = rest % q;
      rest /= q;
    }
    Matrix y(fp, n);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (digits[b] == 0) continue;
      const FieldElement coef{static_cast<std::uint32_t>(digits[b])};
      for (std::size_t v = 0; v < vars; ++v) {
        if (basis[b][v].code == 0) continue;
        y.set(v / n, v % n, f.add(y(v / n, v % n), f.mul(coef, basis[b][v])));
      }
    }
    const FieldElement det = y.determinant();
    if (det_one ? det == f.one() : det.code != 0) ++count;
  }
  return count;
}

}  // namespace fuchs
