#include "fuchs/chartab.hpp"

#include "fuchs/error.hpp"
#include "fuchs/modlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fuchs {

std::uint64_t dixon_prime(std::uint64_t group_order, std::uint32_t exponent, std::size_t skip) {
  const BigInt four_g = BigInt(4) * group_order;
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 32;
  for (std::uint64_t p = std::uint64_t{exponent} + 1; p < kLimit; p += exponent) {
    if (BigInt(p) * p <= four_g || group_order % p == 0 || !is_prime(p)) continue;
    if (skip == 0) return p;
    --skip;
  }
  fail(ErrorKind::PrimeSearchFailed, "no admissible prime below 2^32 for exponent " + std::to_string(exponent));
}

std::uint64_t unity_root_mod(std::uint64_t p, std::uint32_t e) {
  if ((p - 1) % e != 0) fail(ErrorKind::NoSuchRoot, std::to_string(e) + " does not divide " + std::to_string(p - 1));
  return powmod(primitive_root(p), (p - 1) / e, p);
}

namespace {

struct Subspace {
  std::vector<modp::Vec> rows;
  std::vector<std::size_t> pivots;
};

}  // namespace

ModularTable dixon_modular(const GroupTable& group, const ClassData& classes, const std::vector<std::uint64_t>& tensor,
                           std::uint64_t p) {
  const std::size_t r = classes.size();
  ModularTable out;
  out.prime = p;
  out.exponent = classes.exponent;
  out.omega = unity_root_mod(p, classes.exponent);

  std::vector<Subspace> spaces(1);
  for (std::size_t j = 0; j < r; ++j) {
    modp::Vec v(r, 0);
    v[j] = 1;
    spaces[0].rows.push_back(v);
    spaces[0].pivots.push_back(j);
  }
  auto apply = [&](std::size_t i, const modp::Vec& w) {
    modp::Vec y(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
      std::uint64_t acc = 0;
      const std::uint64_t* row = tensor.data() + (i * r + j) * r;
      for (std::size_t k = 0; k < r; ++k) {
        if (row[k] != 0 && w[k] != 0) acc = (acc + mulmod(row[k] % p, w[k], p)) % p;
      }
      y[j] = acc;
    }
    return y;
  };
  for (std::size_t i = 1; i < r; ++i) {
    bool all_split = true;
    for (const auto& s : spaces) all_split = all_split && s.rows.size() == 1;
    if (all_split) break;
    std::vector<Subspace> next;
    for (auto& s : spaces) {
      const std::size_t d = s.rows.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // Restriction of the class matrix to the invariant subspace, in pivot coordinates.
      modp::Mat b(d, modp::Vec(d, 0));
      for (std::size_t c = 0; c < d; ++c) {
        const modp::Vec y = apply(i, s.rows[c]);
        for (std::size_t a = 0; a < d; ++a) b[a][c] = y[s.pivots[a]];
      }
      bool scalar = true;
      for (std::size_t a = 0; a < d && scalar; ++a) {
        for (std::size_t c = 0; c < d && scalar; ++c) scalar = (a == c) ? b[a][c] == b[0][0] : b[a][c] == 0;
      }
      if (scalar) {
        next.push_back(std::move(s));
        continue;
      }
      std::size_t total = 0;
      for (const std::uint64_t lambda : modp::roots(modp::charpoly(b, p), p)) {
        modp::Mat shifted = b;
        for (std::size_t a = 0; a < d; ++a) shifted[a][a] = (shifted[a][a] + p - lambda) % p;
        const auto ker = modp::kernel(shifted, p);
        std::vector<modp::Vec> vectors;
        for (const auto& y : ker) {
          modp::Vec v(r, 0);
          for (std::size_t c = 0; c < d; ++c) {
            if (y[c] == 0) continue;
            for (std::size_t t = 0; t < r; ++t) v[t] = (v[t] + mulmod(y[c], s.rows[c][t], p)) % p;
          }
          vectors.push_back(std::move(v));
        }
        Subspace piece;
        piece.rows = modp::reduce_basis(std::move(vectors), p, piece.pivots);
        total += piece.rows.size();
        next.push_back(std::move(piece));
      }
      if (total != d) fail(ErrorKind::SplitFailed, "eigenspaces of class matrix " + std::to_string(i) + " do not fill the subspace");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) fail(ErrorKind::SplitFailed, "class matrices left a subspace of dimension > 1");

  const std::uint64_t g_mod = group.order() % p;
  const auto root_g = static_cast<std::uint64_t>(std::floor(std::sqrt(static_cast<double>(group.order())))) + 1;
  for (const auto& s : spaces) {
    modp::Vec w = s.rows[0];
    if (w[0] == 0) fail(ErrorKind::SplitFailed, "eigenvector vanishes on the identity class");
    const std::uint64_t inv0 = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, inv0, p);
    std::uint64_t norm = 0;
    for (std::size_t j = 0; j < r; ++j) {
      const std::uint64_t term = mulmod(mulmod(w[j], w[classes.inverse_class[j]], p), invmod(classes.classes[j].size % p, p), p);
      norm = (norm + term) % p;
    }
    if (norm == 0) fail(ErrorKind::SplitFailed, "degenerate central character");
    const std::uint64_t target = mulmod(g_mod, invmod(norm, p), p);
    std::uint64_t degree = 0;
    for (std::uint64_t dd = 1; dd <= root_g; ++dd) {
      if (dd * dd <= group.order() && mulmod(dd, dd, p) == target) {
        degree = dd;
        break;
      }
    }
    if (degree == 0) fail(ErrorKind::SplitFailed, "no character degree matches a central character");
    std::vector<std::uint64_t> row(r);
    for (std::size_t j = 0; j < r; ++j) row[j] = mulmod(mulmod(w[j], degree, p), invmod(classes.classes[j].size % p, p), p);
    out.values.push_back(std::move(row));
    out.degrees.push_back(degree);
  }
  return out;
}

bool modular_orthogonality_holds(const ModularTable& table, const ClassData& classes, std::uint64_t group_order) {
  const std::uint64_t p = table.prime;
  const std::size_t k = table.values.size();
  for (std::size_t a = 0; a < k; ++a) {
    if (table.values[a][0] != table.degrees[a] % p) return false;
    for (std::size_t b = 0; b < k; ++b) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        acc = (acc + mulmod(classes.classes[i].size % p, mulmod(table.values[a][i], table.values[b][classes.inverse_class[i]], p), p)) % p;
      }
      if (acc != (a == b ? group_order % p : 0)) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t e) {
  // Phi_d for each divisor d of e in ascending order: x^d - 1 divided by the earlier Phi's dividing it.
  const auto ds = divisors(e);
  std::vector<std::vector<std::int64_t>> phis;
  for (const auto d : ds) {
    std::vector<std::int64_t> f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    for (std::size_t t = 0; t < phis.size(); ++t) {
      if (d % ds[t] != 0) continue;
      const auto& phi = phis[t];
      const std::size_t dp = phi.size() - 1;
      std::vector<std::int64_t> quot(f.size() - dp, 0);
      for (std::size_t step = f.size() - dp; step-- > 0;) {
        const std::int64_t c = f[step + dp];
        quot[step] = c;
        for (std::size_t u = 0; u <= dp; ++u) f[step + u] -= c * phi[u];
      }
      f = std::move(quot);
    }
    phis.push_back(std::move(f));
  }
  return phis.back();
}

std::vector<BigInt> reduce_cyclotomic(std::vector<BigInt> v, std::uint32_t e) {
  const auto phi = cyclotomic_polynomial(e);
  const std::size_t dp = phi.size() - 1;
  for (std::size_t deg = v.size(); deg-- > dp;) {
    const BigInt c = v[deg];
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dp; ++t) v[deg - dp + t] -= c * phi[t];
  }
  v.resize(std::min(v.size(), dp));
  return v;
}

int compute_schur_indicator(const CharacterTable& table, std::size_t r) {
  std::vector<BigInt> acc(table.exponent, 0);
  for (std::size_t i = 0; i < table.num_classes(); ++i) {
    const auto& mult = table.multiplicities[r][table.classes[i].square];
    for (std::size_t j = 0; j < table.exponent; ++j) acc[j] += BigInt(table.classes[i].size) * mult[j];
  }
  const auto rem = reduce_cyclotomic(std::move(acc), table.exponent);
  for (std::size_t j = 1; j < rem.size(); ++j) {
    if (rem[j] != 0) fail(ErrorKind::NonIntegralIndicator, "indicator sum is not rational");
  }
  const BigInt c = rem.empty() ? BigInt(0) : rem[0];
  const BigInt g = table.group_order;
  if (c == g) return 1;
  if (c == 0) return 0;
  if (c == -g) return -1;
  fail(ErrorKind::NonIntegralIndicator, "indicator sum " + c.str() + " is not in {-|G|, 0, |G|}");
}

int schur_indicator(const CharacterTable& table, std::size_t r) {
  if (r >= table.num_characters()) fail(ErrorKind::OutOfRange, "character index out of range");
  return table.indicators[r];
}

CharacterTable character_table_from_modular(const GroupTable& group, const ClassData& classes, const ModularTable& modular) {
  const std::size_t k = classes.size();
  const std::uint64_t p = modular.prime;
  const std::uint32_t e = classes.exponent;
  CharacterTable table;
  table.group_spec = group.label();
  table.group_order = group.order();
  table.exponent = e;
  table.dixon_prime = p;
  for (std::size_t i = 0; i < k; ++i) {
    ClassSummary s;
    s.size = classes.classes[i].size;
    s.order = classes.classes[i].element_order;
    s.inverse = classes.inverse_class[i];
    s.square = classes.power_class(static_cast<std::uint32_t>(i), 2);
    s.representative = group.element(classes.classes[i].representative).serialize();
    table.classes.push_back(std::move(s));
  }
  // omega_pow[j] = omega^{-j}.
  const std::uint64_t omega_inv = invmod(modular.omega, p);
  std::vector<std::uint64_t> omega_neg(e);
  omega_neg[0] = 1;
  for (std::uint32_t j = 1; j < e; ++j) omega_neg[j] = mulmod(omega_neg[j - 1], omega_inv, p);

  struct Row {
    std::uint64_t degree;
    std::vector<std::vector<std::uint32_t>> mult;
  };
  std::vector<Row> rows;
  for (std::size_t r = 0; r < k; ++r) {
    Row row{modular.degrees[r], {}};
    for (std::size_t c = 0; c < k; ++c) {
      const std::uint32_t o = classes.classes[c].element_order;
      const std::uint32_t step = e / o;
      const std::uint64_t inv_o = invmod(o % p, p);
      std::vector<std::uint32_t> mult(e, 0);
      for (std::uint32_t jj = 0; jj < o; ++jj) {
        std::uint64_t acc = 0;
        for (std::uint32_t t = 0; t < o; ++t) {
          const std::uint64_t chi = modular.values[r][classes.power_class(static_cast<std::uint32_t>(c), t)];
          acc = (acc + mulmod(chi, omega_neg[(static_cast<std::uint64_t>(step) * jj * t) % e], p)) % p;
        }
        const std::uint64_t n = mulmod(acc, inv_o, p);
        if (n > row.degree) fail(ErrorKind::SplitFailed, "eigenvalue multiplicity exceeds the degree");
        mult[step * jj] = static_cast<std::uint32_t>(n);
      }
      const std::uint64_t sum = std::accumulate(mult.begin(), mult.end(), std::uint64_t{0});
      if (sum != row.degree) fail(ErrorKind::SplitFailed, "multiplicities do not sum to the degree");
      row.mult.push_back(std::move(mult));
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.mult > b.mult;
  });
  for (auto& row : rows) {
    table.degrees.push_back(row.degree);
    table.multiplicities.push_back(std::move(row.mult));
  }
  for (std::size_t r = 0; r < k; ++r) table.indicators.push_back(compute_schur_indicator(table, r));
  return table;
}

CharacterTable character_table(const GroupTable& group, const ClassData& classes, std::size_t prime_skip) {
  const auto tensor = structure_tensor(group, classes);
  const std::uint64_t p = dixon_prime(group.order(), classes.exponent, prime_skip);
  return character_table_from_modular(group, classes, dixon_modular(group, classes, tensor, p));
}

std::complex<double> numeric_value(const CharacterTable& table, std::size_t r, std::size_t c) {
  const double two_pi = 2.0 * std::acos(-1.0);
  std::complex<double> acc(0.0, 0.0);
  const auto& mult = table.multiplicities[r][c];
  for (std::size_t j = 0; j < mult.size(); ++j) {
    if (mult[j] == 0) continue;
    const double angle = two_pi * static_cast<double>(j) / table.exponent;
    acc += static_cast<double>(mult[j]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::uint64_t value_mod(const CharacterTable& table, std::size_t r, std::size_t c, std::uint64_t p, std::uint64_t omega) {
  std::uint64_t acc = 0, w = 1;
  const auto& mult = table.multiplicities[r][c];
  for (std::size_t j = 0; j < mult.size(); ++j) {
    if (mult[j] != 0) acc = (acc + mulmod(mult[j] % p, w, p)) % p;
    w = mulmod(w, omega, p);
  }
  return acc;
}

double orthogonality_error(const CharacterTable& table) {
  const std::size_t k = table.num_classes();
  std::vector<std::vector<std::complex<double>>> v(k, std::vector<std::complex<double>>(k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) v[r][c] = numeric_value(table, r, c);
  }
  const double g = static_cast<double>(table.group_order);
  double worst = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      std::complex<double> acc(0, 0);
      for (std::size_t c = 0; c < k; ++c) acc += static_cast<double>(table.classes[c].size) * v[a][c] * std::conj(v[b][c]);
      worst = std::max(worst, std::abs(acc / g - (a == b ? 1.0 : 0.0)));
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      std::complex<double> acc(0, 0);
      for (std::size_t r = 0; r < k; ++r) acc += v[r][c] * std::conj(v[r][d]);
      const double expected = c == d ? g / static_cast<double>(table.classes[c].size) : 0.0;
      worst = std::max(worst, std::abs(acc - expected) / std::max(1.0, expected));
    }
  }
  return worst;
}

namespace {

double zeta_sum(const CharacterTable& table, const Rational& s, bool skip_linear) {
  const double sd = to_double(s);
  double acc = 0;
  for (auto d : table.degrees) {
    if (skip_linear && d == 1) continue;
    acc += std::pow(static_cast<double>(d), -sd);
  }
  return acc;
}

std::optional<Rational> zeta_sum_exact(const CharacterTable& table, const Rational& s, bool skip_linear) {
  if (!is_integer(s) || s < 0) return std::nullopt;
  const auto n = numerator_of(s).convert_to<std::uint64_t>();
  Rational acc = 0;
  for (auto d : table.degrees) {
    if (skip_linear && d == 1) continue;
    acc += Rational(BigInt(1), pow_big(d, n));
  }
  return acc;
}

}  // namespace

double zeta(const CharacterTable& table, const Rational& s) { return zeta_sum(table, s, false); }
double zeta0(const CharacterTable& table, const Rational& s) { return zeta_sum(table, s, true); }
std::optional<Rational> zeta_exact(const CharacterTable& table, const Rational& s) { return zeta_sum_exact(table, s, false); }
std::optional<Rational> zeta0_exact(const CharacterTable& table, const Rational& s) { return zeta_sum_exact(table, s, true); }

RatioReport ratio_exponent_report(const CharacterTable& table, std::size_t class_index) {
  if (class_index >= table.num_classes()) fail(ErrorKind::OutOfRange, "class index out of range");
  RatioReport report;
  report.class_index = class_index;
  for (std::size_t r = 0; r < table.num_characters(); ++r) {
    RatioEntry entry;
    entry.character = r;
    entry.degree = table.degrees[r];
    entry.magnitude = std::abs(numeric_value(table, r, class_index));
    if (entry.magnitude > static_cast<double>(entry.degree) * (1 + 1e-9)) {
      fail(ErrorKind::Mismatch, "character value exceeds its degree");
    }
    if (entry.degree > 1) {
      if (entry.magnitude < 1e-10) {
        entry.exponent = -std::numeric_limits<double>::infinity();
      } else {
        entry.exponent = std::log(entry.magnitude) / std::log(static_cast<double>(entry.degree));
      }
      if (!report.max_exponent || *entry.exponent > *report.max_exponent) report.max_exponent = entry.exponent;
    }
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace fuchs
