#include "fuchs/fuchsian.hpp"

#include "fuchs/error.hpp"
#include "fuchs/levi.hpp"
#include "fuchs/lie_data.hpp"

#include <algorithm>

namespace fuchs {

namespace {

Rational sum_over(const std::vector<std::uint64_t>& ms, Rational (*term)(std::uint64_t)) {
  Rational s = 0;
  for (auto m : ms) s += term(m);
  return s;
}

Rational max_of(Rational a, const std::vector<Rational>& rest) {
  for (const auto& r : rest) a = std::max<Rational>(a, r);
  return a;
}

bool all_odd(const std::vector<std::uint64_t>& ms) {
  return std::all_of(ms.begin(), ms.end(), [](std::uint64_t m) { return m % 2 == 1; });
}

void require_fuchsian(const FuchsianSignature& sig) {
  const auto v = validate(sig);
  if (!v.valid) {
    std::string why;
    for (const auto& r : v.reasons) why += (why.empty() ? "" : "; ") + r;
    fail(ErrorKind::HypothesisFailed, "not a Fuchsian signature: " + why);
  }
}

Rational period_sum(const FuchsianSignature& sig) {
  Rational s = 0;
  for (auto m : sig.periods) s += static_cast<std::int64_t>(m);
  return s;
}

Rational half_square_sum(const FuchsianSignature& sig) {
  Rational s = 0;
  for (auto m : sig.periods) s += Rational(static_cast<std::int64_t>(m * m), 2);
  return s;
}

}  // namespace

Rational measure(const FuchsianSignature& sig) {
  Rational mu = static_cast<std::int64_t>(sig.surface_rank()) - 2;
  for (auto m : sig.periods) mu += 1 - Rational(1, static_cast<std::int64_t>(m));
  return mu;
}

Validation validate(const FuchsianSignature& sig) {
  Validation out;
  try {
    check_signature_fields(sig);
  } catch (const Error& e) {
    out.reasons.push_back(e.what());
    return out;
  }
  const Rational mu = measure(sig);
  if (mu <= 0) out.reasons.push_back("measure " + to_string(mu) + " is not positive");
  if (sig.surface_rank() + sig.d() < 3) out.reasons.push_back("vg + d < 3 (virtually abelian)");
  out.valid = out.reasons.empty();
  return out;
}

ThresholdSet thresholds(const FuchsianSignature& sig) {
  require_fuchsian(sig);
  const auto& ms = sig.periods;
  const auto d = static_cast<std::int64_t>(sig.d());
  ThresholdSet s;
  s.mu = measure(sig);
  s.sigma1 = sum_over(ms, [](std::uint64_t m) { return Rational(1, static_cast<std::int64_t>(m)); });
  s.sigma2 = period_sum(sig);
  s.sigma3 = half_square_sum(sig);
  s.t = sum_over(ms, [](std::uint64_t m) {
    const auto mm = static_cast<std::int64_t>(m);
    return Rational(1, mm - 1) - Rational(1, mm);
  });
  s.nu = std::max<Rational>(Rational(2), 1 + s.sigma1);

  std::vector<Rational> periods_r, cubes, squares;
  for (auto m : ms) {
    const auto mm = static_cast<std::int64_t>(m);
    periods_r.emplace_back(mm);
    cubes.emplace_back(mm * mm * mm, 3);
    squares.emplace_back(mm * mm);
  }
  s.N1 = max_of((2 + s.sigma1) / s.mu, periods_r) + 1;
  if (s.mu > 2) {
    s.N2 = std::max<Rational>(s.N1, Rational(d + 16) / (4 * (s.mu - 2)) + 1);
  } else {
    s.missing["N2"] = "needs mu > 2";
  }
  const bool odd = all_odd(ms);
  if (!odd) {
    s.missing["N3"] = "needs all periods odd";
  } else if (s.mu > s.t) {
    const Rational num = 1 + sum_over(ms, [](std::uint64_t m) { return Rational(2, static_cast<std::int64_t>(m) - 1); });
    s.N3 = max_of(num / (s.mu - s.t), cubes);
  } else {
    s.missing["N3"] = "needs mu > t";
  }
  if (!odd) {
    s.missing["N4"] = "needs all periods odd";
  } else if (s.mu > 2) {
    s.N4 = max_of(Rational(d + 8) / (4 * (s.mu - 2)), squares);
  } else {
    s.missing["N4"] = "needs mu > 2";
  }
  if (!odd) {
    s.missing["N5"] = "needs all periods odd";
  } else if (!(s.mu > std::max<Rational>({Rational(2), s.t, 1 + s.sigma1}))) {
    s.missing["N5"] = "needs mu > max(2, t, 1 + sigma1)";
  } else {
    s.N5 = max_of(*s.N3, {2 * *s.N2, s.sigma1 * *s.N2 + s.sigma3 + 2, 2 * *s.N4, (1 + 2 * s.sigma1) * *s.N4 + s.sigma2});
  }
  return s;
}

std::vector<std::uint64_t> q_admissible(const std::vector<std::uint64_t>& periods, Congruence variant, std::size_t count,
                                        std::optional<std::string_view> type) {
  if (count > 10'000) fail(ErrorKind::OutOfRange, "count is capped at 10000");
  std::uint64_t modulus = 1;
  std::uint64_t product = 1;
  for (auto m : periods) {
    modulus = lcm_u64(modulus, m);
    product *= m;
  }
  if (variant == Congruence::Mod2M) modulus *= 2;
  const auto bad = type ? bad_primes(*type) : std::vector<std::uint64_t>{};
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = modulus + 1; out.size() < count; q += modulus) {
    const auto [p, a] = prime_power(q);
    if (p == 0 || product % p == 0) continue;
    if (std::find(bad.begin(), bad.end(), p) != bad.end()) continue;
    if ((q - 1) % modulus != 0) fail(ErrorKind::Mismatch, "emitted q fails its congruence");
    out.push_back(q);
  }
  return out;
}

DimInterval dim_interval_gl(const FuchsianSignature& sig, std::uint64_t n) {
  const auto th = thresholds(sig);
  const Rational nr(static_cast<std::int64_t>(n));
  if (nr < th.N1) fail(ErrorKind::HypothesisFailed, "n = " + std::to_string(n) + " is below N1 = " + to_string(th.N1));
  const Rational sum_m = period_sum(sig);
  DimInterval out;
  if (th.N2 && nr >= *th.N2) {
    const Rational centre = nr * nr * (1 + th.mu);
    out.c_min = -1;
    out.c_max = th.mu + 1 + sum_m;
    out.lower = centre - *out.c_max;
    out.upper = centre - *out.c_min;
    out.note = "two-sided";
    return out;
  }
  out.lower = (nr * nr - 1) * (1 + th.mu) - sum_m;
  out.note = th.N2 ? "one-sided: n below N2" : "one-sided: mu <= 2";
  return out;
}

ClassicalSeries parse_series(std::string_view text) {
  if (text == "Sp") return ClassicalSeries::Sp;
  if (text == "SO-odd") return ClassicalSeries::SOOdd;
  if (text == "SO-even") return ClassicalSeries::SOEven;
  fail(ErrorKind::ParseError, "classical series must be Sp, SO-odd or SO-even, got '" + std::string(text) + "'");
}

std::string series_name(ClassicalSeries s) {
  switch (s) {
    case ClassicalSeries::Sp: return "Sp";
    case ClassicalSeries::SOOdd: return "SO-odd";
    case ClassicalSeries::SOEven: return "SO-even";
  }
  return "?";
}

std::int64_t series_dimension(ClassicalSeries s, std::uint64_t n) {
  const auto r = static_cast<std::int64_t>(n);
  if (s == ClassicalSeries::SOEven) return (2 * r + 2) * (2 * r + 1) / 2;
  return 2 * r * r + r;
}

DimInterval dim_interval_classical(const FuchsianSignature& sig, ClassicalSeries series, std::uint64_t n) {
  const auto th = thresholds(sig);
  if (!all_odd(sig.periods)) fail(ErrorKind::HypothesisFailed, "all periods must be odd");
  if (!(th.mu > std::max<Rational>(Rational(2), th.t))) {
    fail(ErrorKind::HypothesisFailed, "needs mu > max(2, t); mu = " + to_string(th.mu) + ", t = " + to_string(th.t));
  }
  const Rational nr(static_cast<std::int64_t>(n));
  const Rational bar = std::max<Rational>(*th.N3, *th.N4);
  if (!(nr > bar)) fail(ErrorKind::HypothesisFailed, "n = " + std::to_string(n) + " must exceed max(N3, N4) = " + to_string(bar));
  const Rational centre = (th.mu + 1) * series_dimension(series, n);
  DimInterval out;
  out.c_min = -static_cast<std::int64_t>(sig.d());
  out.c_max = half_square_sum(sig);
  out.lower = centre - *out.c_max;
  out.upper = centre - *out.c_min;
  out.note = "two-sided";
  return out;
}

namespace {

struct ClassicalType {
  char letter;
  int rank;
};

std::optional<ClassicalType> parse_classical_type(std::string_view type) {
  if (type.size() < 2) return std::nullopt;
  const char letter = type[0];
  const std::string digits(type.substr(1));
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) || digits.size() > 2) return std::nullopt;
  const int rank = std::stoi(digits);
  const bool ok = (letter == 'A' && rank >= 1 && rank <= 7) || (letter == 'B' && rank >= 2 && rank <= 4) ||
                  (letter == 'C' && rank >= 2 && rank <= 3) || (letter == 'D' && rank >= 4 && rank <= 7);
  if (!ok) return std::nullopt;
  return ClassicalType{letter, rank};
}

}  // namespace

DimHomReport dim_hom_exceptional(const FuchsianSignature& sig, std::string_view type, JSource source,
                                 const std::map<std::uint64_t, std::int64_t>& user_table) {
  require_fuchsian(sig);
  for (auto m : sig.periods) {
    if (gcd_u64(m, 30) != 1) fail(ErrorKind::HypothesisFailed, "period " + std::to_string(m) + " is not coprime to 30");
  }
  DimHomReport rep;
  rep.type = std::string(type);
  bool lower_only = false;
  int delta = 0;
  if (is_exceptional_type(type)) {
    rep.group_dimension = exceptional_dimension(type);
    for (auto m : sig.periods) {
      if (source == JSource::UserTable) {
        const auto it = user_table.find(m);
        if (it == user_table.end()) fail(ErrorKind::UnknownLabel, "user j-table has no entry for m = " + std::to_string(m));
        rep.jm.push_back(it->second);
      } else {
        rep.jm.push_back(exceptional_jm_lower(type, m));
        lower_only = true;
      }
    }
  } else {
    const auto ct = parse_classical_type(type);
    if (!ct) fail(ErrorKind::UnknownLabel, "unsupported type '" + std::string(type) + "'");
    JmFamily fam = JmFamily::SL;
    int dim = ct->rank + 1;
    if (ct->letter == 'B') {
      fam = JmFamily::SO;
      dim = 2 * ct->rank + 1;
    } else if (ct->letter == 'C') {
      fam = JmFamily::Sp;
      dim = 2 * ct->rank;
    } else if (ct->letter == 'D') {
      fam = JmFamily::SO;
      dim = 2 * ct->rank;
    }
    const Ambient amb = fam == JmFamily::SL ? Ambient::SL : fam == JmFamily::Sp ? Ambient::Sp : Ambient::SO;
    rep.group_dimension = ambient_dimension(amb, dim);
    for (auto m : sig.periods) rep.jm.push_back(dim_Jm(fam, dim, m).jm);
    delta = delta_max(type, sig.periods);
  }
  std::int64_t base = (static_cast<std::int64_t>(sig.surface_rank()) - 1) * rep.group_dimension;
  for (auto j : rep.jm) base += j;
  rep.low = base;
  rep.high = base + delta;
  rep.mode = lower_only ? "lower_bound" : delta > 0 ? "interval" : "exact";
  return rep;
}

BoundFamily parse_bound_family(std::string_view text) {
  if (text == "GL") return BoundFamily::GL;
  if (text == "SL") return BoundFamily::SL;
  if (text == "Sp") return BoundFamily::Sp;
  if (text == "SO-odd") return BoundFamily::SOOdd;
  if (text == "SO-even") return BoundFamily::SOEven;
  fail(ErrorKind::ParseError, "family must be GL, SL, Sp, SO-odd or SO-even, got '" + std::string(text) + "'");
}

std::string bound_family_name(BoundFamily f) {
  switch (f) {
    case BoundFamily::GL: return "GL";
    case BoundFamily::SL: return "SL";
    case BoundFamily::Sp: return "Sp";
    case BoundFamily::SOOdd: return "SO-odd";
    case BoundFamily::SOEven: return "SO-even";
  }
  return "?";
}

BoundExponents bound_exponents(const FuchsianSignature& sig, BoundFamily family, std::uint64_t n) {
  const Rational mu = measure(sig);
  const Rational nr(static_cast<std::int64_t>(n));
  const auto valid = validate(sig);
  BoundExponents out;
  out.hypotheses.emplace_back("fuchsian", valid.valid);
  std::optional<ThresholdSet> th;
  if (valid.valid) th = thresholds(sig);
  if (family == BoundFamily::GL || family == BoundFamily::SL) {
    Rational elliptic = 0;
    for (auto m : sig.periods) elliptic += 1 - Rational(1, static_cast<std::int64_t>(m));
    out.lower_exponent = (nr * nr - 1) * (mu + 1) + elliptic - period_sum(sig);
    out.upper_exponent = 1 + nr * nr * (mu + 1);
    out.hypotheses.emplace_back("lower: n >= N1", th && nr >= th->N1);
    out.hypotheses.emplace_back("upper: mu > 2", mu > 2);
    out.hypotheses.emplace_back("upper: n >= N2", th && th->N2 && nr >= *th->N2);
    return out;
  }
  const ClassicalSeries s = family == BoundFamily::Sp ? ClassicalSeries::Sp
                            : family == BoundFamily::SOOdd ? ClassicalSeries::SOOdd
                                                           : ClassicalSeries::SOEven;
  const Rational dim_g(series_dimension(s, n));
  out.lower_exponent = (mu + 1) * dim_g - half_square_sum(sig);
  out.upper_exponent = static_cast<std::int64_t>(sig.d()) + (mu + 1) * dim_g;
  const bool odd = all_odd(sig.periods);
  out.hypotheses.emplace_back("periods odd", odd);
  out.hypotheses.emplace_back("lower: mu > t", th && mu > th->t);
  out.hypotheses.emplace_back("lower: n > N3", th && th->N3 && nr > *th->N3);
  out.hypotheses.emplace_back("upper: mu > 2", mu > 2);
  out.hypotheses.emplace_back("upper: n > N4", th && th->N4 && nr > *th->N4);
  return out;
}

}  // namespace fuchs
