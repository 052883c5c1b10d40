#include "fuchs/error.hpp"
#include "fuchs/fuchsian.hpp"
#include "fuchs/lie_data.hpp"
#include "fuchs/signature.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace fuchs;

namespace {

FuchsianSignature sig(const char* s) { return parse_signature(s); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t characteristic(std::uint64_t q) {
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p == 0) return p;
  }
  return q;
}

bool is_prime_power(std::uint64_t q) {
  const auto p = characteristic(q);
  while (q % p == 0) q /= p;
  return q == 1 && is_prime(p);
}

}  // namespace

TEST(Signature, ParseAndPrint) {
  const auto s = sig("n:g=1:m=3,3");
  EXPECT_EQ(s.v, 1);
  EXPECT_EQ(s.genus, 1u);
  EXPECT_EQ(s.periods, (std::vector<std::uint64_t>{3, 3}));
  EXPECT_EQ(to_string(sig("o:g=2")), "o:g=2");
  EXPECT_THROW(sig("n:g=0:m=2,3"), Error);
  EXPECT_THROW(sig("o:g=0:m=1,3"), Error);
  EXPECT_THROW(sig("o:q=0"), Error);
}

TEST(Measure, Examples) {
  EXPECT_EQ(measure(sig("o:g=0:m=2,3,7")), Rational(1, 42));
  EXPECT_EQ(measure(sig("o:g=2")), 2);
  EXPECT_EQ(measure(sig("n:g=1:m=3,3")), Rational(1, 3));
}

TEST(Measure, AppendingAPeriodAddsOneMinusItsInverse) {
  for (const char* base : {"o:g=0:m=2,3", "n:g=1", "o:g=2:m=5", "n:g=3:m=2,2"}) {
    for (std::uint64_t m = 2; m <= 20; ++m) {
      auto s = sig(base);
      const Rational before = measure(s);
      s.periods.push_back(m);
      EXPECT_EQ(measure(s) - before, 1 - Rational(1, static_cast<std::int64_t>(m)));
    }
  }
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(sig("o:g=0:m=2,3,7")).valid);
  EXPECT_FALSE(validate(sig("o:g=1")).valid);
  EXPECT_FALSE(validate(sig("o:g=0:m=2,2,2")).valid);
  EXPECT_FALSE(validate(sig("o:g=0:m=2,2,2")).reasons.empty());
}

TEST(Validate, TrianglesValidExactlyWhenHyperbolic) {
  for (std::uint64_t a = 2; a <= 12; ++a) {
    for (std::uint64_t b = a; b <= 12; ++b) {
      for (std::uint64_t c = b; c <= 12; ++c) {
        const FuchsianSignature s{2, 0, {a, b, c}};
        const Rational inv = Rational(1, a) + Rational(1, b) + Rational(1, c);
        EXPECT_EQ(validate(s).valid, inv < 1) << a << "," << b << "," << c;
        if (validate(s).valid) EXPECT_GT(measure(s), 0);
      }
    }
  }
}

TEST(Thresholds, SevenFold) {
  const auto th = thresholds(sig("o:g=0:m=7,7,7,7,7"));
  EXPECT_EQ(th.mu, Rational(16, 7));
  EXPECT_EQ(th.N1, 8);
  ASSERT_TRUE(th.N2);
  EXPECT_EQ(*th.N2, Rational(155, 8));
  EXPECT_GE(*th.N2, th.N1);
}

TEST(Thresholds, HurwitzHasOnlyN1) {
  const auto th = thresholds(sig("o:g=0:m=2,3,7"));
  EXPECT_FALSE(th.N2);
  EXPECT_TRUE(th.missing.count("N2"));
  EXPECT_THROW(thresholds(sig("o:g=0:m=2,2,2")), Error);
}

TEST(Thresholds, OrderingAndMonotonicity) {
  for (const char* base : {"o:g=3:m=3,5", "o:g=2:m=7,7,7", "n:g=6:m=3,3,5", "o:g=1:m=7,7,7", "o:g=4"}) {
    const auto s = sig(base);
    const auto th = thresholds(s);
    const std::uint64_t top = s.periods.empty() ? 0 : *std::max_element(s.periods.begin(), s.periods.end());
    EXPECT_GE(th.N1, static_cast<std::int64_t>(top) + 1);
    if (th.N2) EXPECT_GE(*th.N2, th.N1);
    if (th.N5) {
      EXPECT_GE(*th.N5, *th.N3);
      EXPECT_GE(*th.N5, 2 * *th.N2);
      EXPECT_GE(*th.N5, 2 * *th.N4);
    }
    for (std::size_t i = 0; i < s.periods.size(); ++i) {
      auto bigger = s;
      bigger.periods[i] += 2;
      const auto tb = thresholds(bigger);
      EXPECT_GE(tb.sigma2, th.sigma2);
      EXPECT_GE(tb.sigma3, th.sigma3);
    }
  }
}

TEST(Thresholds, OddPeriodsHandArithmetic) {
  const auto th = thresholds(sig("o:g=1:m=7,7,7"));
  EXPECT_EQ(th.mu, Rational(18, 7));
  EXPECT_EQ(th.t, Rational(3, 42));
  // N3 = max((1 + 3*(2/6)) / (18/7 - 1/14), 343/3) = 343/3
  ASSERT_TRUE(th.N3);
  EXPECT_EQ(*th.N3, Rational(343, 3));
  // N4 = max((3+8) / (4*(4/7)), 49) = 49
  ASSERT_TRUE(th.N4);
  EXPECT_EQ(*th.N4, 49);
}

TEST(QAdmissible, Examples) {
  EXPECT_EQ(q_admissible({3}, Congruence::ModM, 3), (std::vector<std::uint64_t>{4, 7, 13}));
  EXPECT_EQ(q_admissible({2, 3, 7}, Congruence::ModM, 1), (std::vector<std::uint64_t>{43}));
  EXPECT_EQ(q_admissible({3}, Congruence::Mod2M, 3), (std::vector<std::uint64_t>{7, 13, 19}));
}

TEST(QAdmissible, OutputsRecheckedBySieve) {
  const std::vector<std::vector<std::uint64_t>> cases = {{2, 3, 7}, {3, 3, 5}, {7}, {4, 6}, {5, 5, 5, 5}};
  for (const auto& periods : cases) {
    std::uint64_t l = 1;
    for (auto m : periods) l = std::lcm(l, m);
    for (auto variant : {Congruence::ModM, Congruence::Mod2M}) {
      const std::uint64_t mod = variant == Congruence::ModM ? l : 2 * l;
      const auto qs = q_admissible(periods, variant, 25);
      ASSERT_EQ(qs.size(), 25u);
      // Sieve independently up to the last emitted value.
      std::vector<std::uint64_t> expect;
      for (std::uint64_t q = 2; q <= qs.back(); ++q) {
        if (!is_prime_power(q) || q % mod != 1) continue;
        const auto p = characteristic(q);
        if (std::any_of(periods.begin(), periods.end(), [p](std::uint64_t m) { return m % p == 0; })) continue;
        expect.push_back(q);
      }
      EXPECT_EQ(qs, expect);
    }
  }
}

TEST(QAdmissible, GoodPrimeFilter) {
  for (auto q : q_admissible({7}, Congruence::ModM, 40, "E8")) EXPECT_TRUE(characteristic(q) > 5) << q;
  for (auto q : q_admissible({3}, Congruence::ModM, 40, "A5")) EXPECT_EQ(q % 3, 1u);
  EXPECT_FALSE(q_admissible({3}, Congruence::ModM, 5, "A5").empty());
  EXPECT_EQ(q_admissible({3}, Congruence::ModM, 3, "A5").front(), 4u);
  EXPECT_EQ(q_admissible({3}, Congruence::ModM, 3, "C3").front(), 7u);
}

TEST(DimIntervalGL, TwoSidedAtSevenFold) {
  const auto s = sig("o:g=0:m=7,7,7,7,7");
  const auto iv = dim_interval_gl(s, 30);
  const Rational mu(16, 7);
  EXPECT_EQ(iv.lower, 900 * (1 + mu) - (mu + 1 + 35));
  ASSERT_TRUE(iv.upper);
  EXPECT_EQ(*iv.upper, 900 * (1 + mu) + 1);
}

TEST(DimIntervalGL, OneSidedWhenMeasureSmall) {
  const auto s = sig("o:g=0:m=2,3,7");
  const std::uint64_t n = 130;
  ASSERT_LE(thresholds(s).N1, 130);
  const auto iv = dim_interval_gl(s, n);
  EXPECT_FALSE(iv.upper);
  const Rational mu(1, 42);
  EXPECT_EQ(iv.lower, Rational(static_cast<std::int64_t>(n * n - 1)) * (1 + mu) - 12);
}

TEST(DimIntervalGL, BelowN1Fails) {
  try {
    dim_interval_gl(sig("o:g=0:m=7,7,7,7,7"), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisFailed);
  }
}

TEST(DimIntervalClassical, Cases) {
  EXPECT_THROW(dim_interval_classical(sig("o:g=0:m=7,7,7"), ClassicalSeries::Sp, 400), Error);
  const auto s = sig("o:g=1:m=7,7,7");
  const auto iv = dim_interval_classical(s, ClassicalSeries::Sp, 200);
  const Rational dim_g = 2 * 200 * 200 + 200, mu(18, 7);
  EXPECT_EQ(iv.lower, (mu + 1) * dim_g - Rational(147, 2));
  EXPECT_EQ(*iv.upper, (mu + 1) * dim_g + 3);
  const auto closed = dim_interval_classical(sig("o:g=3"), ClassicalSeries::SOEven, 10);
  const Rational d_so = Rational(22 * 21, 2);
  EXPECT_EQ(closed.lower, 5 * d_so);
  EXPECT_EQ(*closed.upper, 5 * d_so);
  EXPECT_THROW(dim_interval_classical(sig("o:g=1:m=4,4,4"), ClassicalSeries::Sp, 200), Error);
}

TEST(SeriesDimension, Formulas) {
  EXPECT_EQ(series_dimension(ClassicalSeries::Sp, 3), 21);
  EXPECT_EQ(series_dimension(ClassicalSeries::SOOdd, 3), 21);
  EXPECT_EQ(series_dimension(ClassicalSeries::SOEven, 3), 28);
}

TEST(DimHom, Examples) {
  const auto e8 = dim_hom_exceptional(sig("o:g=0:m=7,7,7"), "E8");
  EXPECT_EQ(e8.low, -248 + 3 * 212);
  EXPECT_EQ(e8.mode, "lower_bound");
  const auto d7 = dim_hom_exceptional(sig("o:g=0:m=7,7,7"), "D7");
  EXPECT_EQ(d7.low, 143);
  EXPECT_EQ(d7.high, 144);
  const auto g2 = dim_hom_exceptional(sig("o:g=1:m=7"), "G2");
  EXPECT_EQ(g2.low, 26);
  EXPECT_THROW(dim_hom_exceptional(sig("o:g=0:m=5,7,7"), "E8"), Error);
}

TEST(DimHom, UserTableGivesExactValue) {
  const auto r = dim_hom_exceptional(sig("o:g=0:m=7,7,11"), "G2", JSource::UserTable, {{7, 12}, {11, 12}});
  EXPECT_EQ(r.low, -14 + 36);
  EXPECT_EQ(r.high, r.low);
}

TEST(DimHom, ClassicalWithoutPeriodsIsExact) {
  for (const char* type : {"A3", "B2", "C3", "D5", "D7", "A7"}) {
    for (const char* s : {"o:g=2", "o:g=3", "n:g=4"}) {
      const auto parsed = sig(s);
      const auto r = dim_hom_exceptional(parsed, type);
      EXPECT_EQ(r.low, (static_cast<std::int64_t>(parsed.surface_rank()) - 1) * r.group_dimension) << type << s;
      EXPECT_EQ(r.high, r.low);
    }
  }
}

TEST(Bounds, Exponents) {
  const auto s = sig("o:g=0:m=7,7,7,7,7");
  const Rational mu(16, 7);
  const auto sl = bound_exponents(s, BoundFamily::SL, 100);
  EXPECT_EQ(sl.lower_exponent, Rational(9999) * (mu + 1) - 35 + 5 * Rational(6, 7));
  const auto sp = bound_exponents(sig("o:g=1:m=7,7,7"), BoundFamily::Sp, 200);
  EXPECT_EQ(sp.lower_exponent, (Rational(18, 7) + 1) * (2 * 200 * 200 + 200) - Rational(147, 2));
  const auto small = bound_exponents(s, BoundFamily::GL, 3);
  bool flagged = false;
  for (const auto& [name, ok] : small.hypotheses) flagged = flagged || !ok;
  EXPECT_TRUE(flagged);
}

TEST(LieData, StoredValues) {
  EXPECT_EQ(alpha_exceptional("E8", "E7").value, Rational(17, 29));
  EXPECT_EQ(alpha_exceptional("G2", "A1").value, Rational(1, 3));
  EXPECT_EQ(alpha_exceptional("F4", "~A1").value, Rational(1, 11));
  EXPECT_THROW(alpha_exceptional("E8", "nonsense"), Error);
  EXPECT_EQ(exceptional_jm_lower("E8", 7), 212);
  EXPECT_EQ(exceptional_jm_lower("G2", 11), 12);
  try {
    exceptional_jm_lower("E6", 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
  EXPECT_EQ(coxeter_number("E8"), 30);
  EXPECT_EQ(exceptional_dimension("E7"), 133);
  EXPECT_EQ(bad_primes("E8"), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_TRUE(bad_primes("A4").empty());
  EXPECT_EQ(bad_primes("D5"), (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(delta_max("D5", {7, 7, 7}), 3);
  EXPECT_EQ(delta_max("D6", {7, 7, 7}), 2);
  EXPECT_EQ(delta_max("A7", {7, 7, 7}), 1);
  EXPECT_EQ(delta_max("D5", {7, 7, 11}), 1);
  EXPECT_EQ(delta_max("D5", {11, 7, 7}), 1);
  EXPECT_EQ(delta_max("E8", {7, 7, 7}), 0);
  EXPECT_FALSE(data_version().empty());
}
