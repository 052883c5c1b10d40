#include "fuchs/chartab.hpp"
#include "fuchs/classes.hpp"
#include "fuchs/group.hpp"
#include "fuchs/modlinalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace fuchs;

namespace {

struct Loaded {
  GroupTable group;
  ClassData classes;
  CharacterTable table;
};

Loaded load(const char* spec) {
  auto g = standard_group(parse_group_spec(spec));
  auto d = conjugacy_classes(g);
  auto t = character_table(g, d);
  return {std::move(g), std::move(d), std::move(t)};
}

std::vector<std::uint64_t> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(CharacterTable, CyclicOfOrderThree) {
  const auto l = load("C(3)");
  EXPECT_EQ(sorted_degrees(l.table), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(l.table.indicators[0], 1);
  // Nontrivial characters are complex: indicator 0 and values primitive cube roots.
  for (std::size_t r = 1; r < 3; ++r) {
    EXPECT_EQ(l.table.indicators[r], 0);
    for (std::size_t c = 1; c < 3; ++c) {
      const auto v = numeric_value(l.table, r, c);
      EXPECT_NEAR(std::abs(v), 1.0, 1e-12);
      EXPECT_NEAR(v.real(), -0.5, 1e-12);
    }
  }
}

TEST(CharacterTable, SymmetricGroupOnThreePoints) {
  const auto l = load("S(3)");
  EXPECT_EQ(sorted_degrees(l.table), (std::vector<std::uint64_t>{1, 1, 2}));
  int fs = 0;
  for (std::size_t r = 0; r < 3; ++r) {
    EXPECT_EQ(l.table.indicators[r], 1);
    fs += l.table.indicators[r] * static_cast<int>(l.table.degrees[r]);
  }
  EXPECT_EQ(fs, 4);
}

TEST(CharacterTable, TrivialCharacterComesFirst) {
  const auto l = load("A(5)");
  EXPECT_EQ(l.table.degrees[0], 1u);
  for (std::size_t c = 0; c < l.table.num_classes(); ++c) EXPECT_NEAR(numeric_value(l.table, 0, c).real(), 1.0, 1e-12);
}

TEST(CharacterTable, SL25HasNineDegrees) {
  const auto l = load("SL(2,5)");
  ASSERT_EQ(l.table.num_characters(), 9u);
  std::uint64_t s = 0;
  for (auto d : l.table.degrees) s += d * d;
  EXPECT_EQ(s, 120u);
}

class TableInvariants : public ::testing::TestWithParam<const char*> {};

TEST_P(TableInvariants, CountsDegreesOrthogonalityIndicators) {
  const auto l = load(GetParam());
  const auto& t = l.table;
  EXPECT_EQ(t.num_characters(), l.classes.size());
  std::uint64_t sum_sq = 0;
  for (auto d : t.degrees) sum_sq += d * d;
  EXPECT_EQ(sum_sq, l.group.order());
  EXPECT_LE(orthogonality_error(t), 1e-8);

  // Indicators against a direct count of square roots of the identity.
  std::int64_t fs = 0;
  for (std::size_t r = 0; r < t.num_characters(); ++r) fs += t.indicators[r] * static_cast<std::int64_t>(t.degrees[r]);
  std::int64_t roots = 0;
  for (ElementId x = 0; x < l.group.order(); ++x) roots += l.group.multiply(x, x) == l.group.identity();
  EXPECT_EQ(fs, roots);
  for (std::size_t r = 0; r < t.num_characters(); ++r) EXPECT_EQ(t.indicators[r], compute_schur_indicator(t, r));

  // Numeric row orthogonality computed here from class sizes.
  for (std::size_t a = 0; a < t.num_characters(); ++a) {
    for (std::size_t b = 0; b < t.num_characters(); ++b) {
      std::complex<double> acc = 0;
      for (std::size_t c = 0; c < t.num_classes(); ++c) {
        acc += static_cast<double>(t.classes[c].size) * numeric_value(t, a, c) * std::conj(numeric_value(t, b, c));
      }
      acc /= static_cast<double>(l.group.order());
      EXPECT_NEAR(acc.real(), a == b ? 1.0 : 0.0, 1e-8);
      EXPECT_NEAR(acc.imag(), 0.0, 1e-8);
    }
  }
}

TEST_P(TableInvariants, TwoPrimesAgree) {
  const auto l = load(GetParam());
  const auto tensor = structure_tensor(l.group, l.classes);
  for (std::size_t skip = 0; skip < 2; ++skip) {
    const auto p = dixon_prime(l.group.order(), l.classes.exponent, skip);
    EXPECT_TRUE(modular_orthogonality_holds(dixon_modular(l.group, l.classes, tensor, p), l.classes, l.group.order()));
  }
  auto other = character_table(l.group, l.classes, 1);
  EXPECT_NE(other.dixon_prime, l.table.dixon_prime);
  other.dixon_prime = l.table.dixon_prime;
  EXPECT_EQ(other, l.table);
}

TEST_P(TableInvariants, ZetaDecreasesWhenNonabelian) {
  const auto l = load(GetParam());
  const bool abelian = std::all_of(l.table.degrees.begin(), l.table.degrees.end(), [](auto d) { return d == 1; });
  const Rational s1(1, 2), s2(1), s3(3, 2);
  if (abelian) {
    EXPECT_DOUBLE_EQ(zeta(l.table, s2), static_cast<double>(l.group.order()));
  } else {
    EXPECT_GT(zeta(l.table, s1), zeta(l.table, s2));
    EXPECT_GT(zeta(l.table, s2), zeta(l.table, s3));
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, TableInvariants,
                         ::testing::Values("C(5)", "S(3)", "S(4)", "A(4)", "A(5)", "D(4)", "SL(2,3)", "SL(2,5)", "PSL(2,7)", "GL(2,3)",
                                           "SL(2,4)", "GL(2,4)"));

TEST(Zeta, Examples) {
  EXPECT_DOUBLE_EQ(zeta(load("C(5)").table, Rational(7, 3)), 5.0);
  EXPECT_EQ(zeta_exact(load("C(5)").table, Rational(3)), Rational(5));
  EXPECT_FALSE(zeta_exact(load("C(5)").table, Rational(7, 3)).has_value());
  EXPECT_EQ(zeta_exact(load("C(1)").table, Rational(2)), Rational(1));
  const auto s3 = load("S(3)");
  EXPECT_EQ(zeta_exact(s3.table, Rational(1)), Rational(5, 2));
  EXPECT_EQ(zeta0_exact(s3.table, Rational(1)), Rational(1, 2));
  EXPECT_EQ(zeta0_exact(load("C(4)").table, Rational(1)), Rational(0));
  const auto sl = load("SL(2,5)");
  const double z0 = zeta0(sl.table, Rational(2));
  EXPECT_GT(z0, 0.0);
  EXPECT_LE(z0, static_cast<double>(sl.table.num_characters() - 2) / 4.0);
}

TEST(RatioExponents, IdentityAndCentralClasses) {
  const auto l = load("SL(2,5)");
  const auto id = ratio_exponent_report(l.table, 0);
  for (const auto& e : id.entries) {
    if (e.degree > 1) EXPECT_NEAR(*e.exponent, 1.0, 1e-12);
    else EXPECT_FALSE(e.exponent.has_value());
  }
  std::size_t central = l.table.num_classes();
  for (std::size_t c = 1; c < l.table.num_classes(); ++c) {
    if (l.table.classes[c].size == 1) central = c;
  }
  ASSERT_LT(central, l.table.num_classes());
  const auto rep = ratio_exponent_report(l.table, central);
  for (const auto& e : rep.entries) {
    EXPECT_NEAR(e.magnitude, static_cast<double>(e.degree), 1e-9);
    if (e.exponent) EXPECT_NEAR(*e.exponent, 1.0, 1e-9);
  }
}
