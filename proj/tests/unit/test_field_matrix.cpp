#include "fuchs/error.hpp"
#include "fuchs/field.hpp"
#include "fuchs/matrix.hpp"
#include "fuchs/numeric.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace fuchs;

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Matrix random_matrix(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  Matrix m(f, n);
  std::uniform_int_distribution<std::uint64_t> pick(0, f->order() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, FieldElement{static_cast<std::uint32_t>(pick(rng))});
  }
  return m;
}

}  // namespace

TEST(Field, PrimeFieldGeneratorIsThreeModSeven) {
  const auto f = field_make(7);
  EXPECT_EQ(f->generator(), f->from_int(3));
  EXPECT_EQ(f->multiplicative_order(f->generator()), 6u);
}

TEST(Field, BinaryFieldGeneratorIsOne) {
  const auto f = field_make(2);
  EXPECT_EQ(f->generator(), f->one());
}

TEST(Field, NineElementGeneratorHasOrderEightByExhaustiveCheck) {
  const auto f = field_make(3, 2);
  ASSERT_EQ(f->order(), 9u);
  // Independent check: the 8 powers of the generator are distinct nonzero elements.
  std::set<std::uint32_t> seen;
  FieldElement x = f->one();
  for (int i = 0; i < 8; ++i) {
    seen.insert(x.code);
    x = f->mul(x, f->generator());
  }
  EXPECT_EQ(seen.size(), 8u);
  EXPECT_EQ(x, f->one());
}

TEST(Field, GeneratorIsPrimitiveForEveryOrderUpTo128) {
  for (std::uint64_t q = 2; q <= 128; ++q) {
    const auto [p, a] = prime_power(q);
    if (p == 0) continue;
    const auto f = field_make(static_cast<std::uint32_t>(p), a);
    EXPECT_EQ(f->pow(f->generator(), static_cast<std::int64_t>(q - 1)), f->one()) << q;
    for (auto r : prime_factors(q - 1)) EXPECT_NE(f->pow(f->generator(), static_cast<std::int64_t>((q - 1) / r)), f->one()) << q;
  }
}

TEST(Field, RootOfUnityExamples) {
  const auto f = field_make(7);
  const auto w = root_of_unity(*f, 3);
  EXPECT_TRUE(w == f->from_int(2) || w == f->from_int(4));
  EXPECT_EQ(root_of_unity(*f, 1), f->one());
  try {
    root_of_unity(*f, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSuchRoot);
  }
}

TEST(Field, RootOfUnityHasExactOrder) {
  for (auto [p, a] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 1}, {13, 1}, {29, 1}, {5, 2}, {2, 3}, {3, 3}}) {
    const auto f = field_make(p, a);
    for (std::uint64_t m = 1; m <= f->order() - 1; ++m) {
      if ((f->order() - 1) % m) continue;
      const auto w = root_of_unity(*f, m);
      EXPECT_EQ(f->pow(w, static_cast<std::int64_t>(m)), f->one());
      for (std::uint64_t k = 1; k < m; ++k) EXPECT_NE(f->pow(w, static_cast<std::int64_t>(k)), f->one());
    }
  }
}

TEST(Field, NonPrimePowerRejected) {
  EXPECT_EQ(prime_power(12).first, 0u);
  EXPECT_EQ(prime_power(49).first, 7u);
  EXPECT_EQ(prime_power(49).second, 2u);
}

TEST(Matrix, OrderExamples) {
  const auto f7 = field_make(7);
  EXPECT_EQ(matrix_order(Matrix::identity(f7, 3), 100), 1u);
  EXPECT_EQ(matrix_order(Matrix::diagonal(f7, {f7->from_int(1), f7->from_int(2), f7->from_int(4)}), 100), 3u);
  const auto f5 = field_make(5);
  EXPECT_EQ(matrix_order(Matrix::diagonal(f5, {f5->one(), f5->from_int(-1)}), 100), 2u);
}

TEST(Matrix, AssociativityAndInverseOnRandomSamples) {
  std::mt19937_64 rng(12345);
  for (auto [p, a] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {7, 1}, {2, 2}, {3, 2}}) {
    const auto f = field_make(p, a);
    int inverted = 0;
    for (int s = 0; s < 1000; ++s) {
      const std::size_t n = 1 + s % 4;
      const auto A = random_matrix(f, n, rng), B = random_matrix(f, n, rng), C = random_matrix(f, n, rng);
      ASSERT_EQ((A * B) * C, A * (B * C));
      if (A.determinant() != f->zero()) {
        ASSERT_TRUE((A * A.inverse()).is_identity());
        ++inverted;
      }
    }
    EXPECT_GT(inverted, 300);
  }
}

TEST(Numeric, RationalRoundTrip) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
}
