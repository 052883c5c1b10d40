#include "fuchs/classes.hpp"
#include "fuchs/construct.hpp"
#include "fuchs/error.hpp"
#include "fuchs/group.hpp"

#include <gtest/gtest.h>

using namespace fuchs;

namespace {

FieldPtr field(std::uint64_t q) {
  const auto [p, a] = prime_power(q);
  return field_make(static_cast<std::uint32_t>(p), a);
}

BigInt product_formula_gl(std::uint64_t n, std::uint64_t q) {
  BigInt out = 1, qn = 1;
  for (std::uint64_t i = 0; i < n; ++i) qn *= q;
  BigInt qi = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return out;
}

}  // namespace

TEST(OrderFormulas, SmallCases) {
  EXPECT_EQ(order_gl_q(2, 5), 480);
  EXPECT_EQ(order_sp_q(4, 3), 51840);
  // |SO_3(q)| = |PGL_2(q)| = q(q^2-1).
  EXPECT_EQ(order_so_q(3, 7), 7 * 48);
  // |SO^+_4(q)| = q^2 (q^2-1)^2.
  EXPECT_EQ(order_so_q(4, 5), 25 * 24 * 24);
  for (std::uint64_t n = 1; n <= 5; ++n) EXPECT_EQ(order_gl_q(n, 7), product_formula_gl(n, 7));
}

TEST(Construct, GL337) {
  const auto e = construct_element(Ambient::GL, 3, 3, field(7));
  const auto f = e.matrix.field_ptr();
  EXPECT_EQ(e.matrix, Matrix::diagonal(f, {f->from_int(1), f->from_int(2), f->from_int(4)}));
  EXPECT_EQ(matrix_order(e.matrix, 100), 3u);
  EXPECT_EQ(e.centralizer_order, 216);
  EXPECT_EQ(*commutant_centralizer_order(e.matrix, false), 216);
}

TEST(Construct, GL425) {
  const auto e = construct_element(Ambient::GL, 4, 2, field(5));
  const auto f = e.matrix.field_ptr();
  EXPECT_EQ(e.matrix, Matrix::diagonal(f, {f->one(), f->one(), f->from_int(-1), f->from_int(-1)}));
  EXPECT_EQ(e.centralizer_order, 480 * 480);
  EXPECT_EQ(*commutant_centralizer_order(e.matrix, false), 480 * 480);
}

TEST(Construct, SL425IsSplitDiagonal) {
  const auto e = construct_element(Ambient::SL, 4, 2, field(5));
  const auto f = e.matrix.field_ptr();
  EXPECT_EQ(e.matrix, Matrix::diagonal(f, {f->one(), f->one(), f->from_int(-1), f->from_int(-1)}));
  EXPECT_EQ(e.matrix.determinant(), f->one());
  ASSERT_TRUE(e.centralizer_order_in_sl);
  EXPECT_EQ(*commutant_centralizer_order(e.matrix, true), *e.centralizer_order_in_sl);
}

TEST(Construct, SLOddBlockSplitCase) {
  const auto e = construct_element(Ambient::SL, 6, 2, field(7));
  EXPECT_TRUE(e.split_case);
  EXPECT_EQ(matrix_order(e.matrix, 10), 2u);
  EXPECT_EQ(e.matrix.determinant(), e.matrix.field().one());
  EXPECT_EQ(e.centralizer.gl_blocks, (std::vector<int>{4, 2}));
}

TEST(Construct, SL2OrderTwoInadmissible) {
  try {
    construct_element(Ambient::SL, 2, 2, field(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Inadmissible);
  }
}

TEST(Construct, IdentityClassNotApplicable) {
  const auto e = construct_element(Ambient::GL, 3, 1, field(7));
  EXPECT_TRUE(e.matrix.is_identity());
  const auto r = class_size_check(e);
  EXPECT_FALSE(r.applicable);
  EXPECT_EQ(r.class_size, 1);
}

TEST(Construct, GroupScanMatchesPredictionOnSmallGroups) {
  struct Case {
    Ambient family;
    int n;
    std::uint64_t m, q;
  };
  const Case cases[] = {{Ambient::GL, 2, 2, 3}, {Ambient::GL, 2, 2, 5}, {Ambient::GL, 2, 2, 7}, {Ambient::GL, 3, 2, 3},
                        {Ambient::GL, 3, 3, 4}, {Ambient::GL, 3, 2, 5}, {Ambient::SL, 3, 3, 4}, {Ambient::SL, 3, 2, 3},
                        {Ambient::GL, 2, 2, 9}, {Ambient::SL, 3, 2, 5}};
  for (const auto& c : cases) {
    const auto e = construct_element(c.family, c.n, c.m, field(c.q));
    ASSERT_EQ(matrix_order(e.matrix, c.m), c.m);
    const auto gl = standard_group(GroupSpec{GroupFamily::GL, static_cast<std::uint32_t>(c.n), c.q});
    EXPECT_EQ(BigInt(centralizer_order(gl, GroupElement::matrix(e.matrix))), e.centralizer_order) << ambient_name(c.family) << c.n;
    if (c.family == Ambient::SL) {
      const auto sl = standard_group(GroupSpec{GroupFamily::SL, static_cast<std::uint32_t>(c.n), c.q});
      EXPECT_EQ(BigInt(centralizer_order(sl, GroupElement::matrix(e.matrix))), *e.centralizer_order_in_sl);
      const auto scan = class_size_check(e, sl);
      EXPECT_EQ(scan.class_size, class_size_check(e).class_size);
    } else {
      const auto scan = class_size_check(e, gl);
      EXPECT_EQ(scan.source, "group-scan");
      EXPECT_EQ(scan.class_size, class_size_check(e).class_size);
      EXPECT_TRUE(scan.exceeds_exponent_bound);
    }
  }
}

TEST(Construct, GL223ClassSize) {
  const auto e = construct_element(Ambient::GL, 2, 2, field(3));
  const auto r = class_size_check(e, standard_group(GroupSpec{GroupFamily::GL, 2, 3}));
  EXPECT_EQ(r.centralizer_order, 4);
  EXPECT_EQ(r.class_size, 12);
}

TEST(Construct, CommutantAgreesWithPredictionAcrossSizes) {
  for (std::uint64_t q : {5, 7, 9, 13}) {
    for (int n = 2; n <= 5; ++n) {
      for (std::uint64_t m = 2; m <= static_cast<std::uint64_t>(n); ++m) {
        if ((q - 1) % m) continue;
        const auto e = construct_element(Ambient::GL, n, m, field(q));
        if (const auto c = commutant_centralizer_order(e.matrix, false)) EXPECT_EQ(*c, e.centralizer_order) << n << " " << m << " " << q;
        EXPECT_TRUE(class_size_check(e).exceeds_exponent_bound) << n << " " << m << " " << q;
      }
    }
  }
}

TEST(Construct, SymplecticAndOrthogonalPreserveForm) {
  struct Case {
    Ambient family;
    int n;
    std::uint64_t m, q;
  };
  const Case cases[] = {{Ambient::Sp, 8, 3, 7}, {Ambient::Sp, 6, 3, 7}, {Ambient::Sp, 10, 5, 11},
                        {Ambient::SO, 14, 7, 29}, {Ambient::SO, 9, 3, 7}, {Ambient::SO, 10, 5, 11}};
  for (const auto& c : cases) {
    const auto e = construct_element(c.family, c.n, c.m, field(c.q));
    ASSERT_TRUE(e.form);
    EXPECT_EQ(e.matrix.transpose() * *e.form * e.matrix, *e.form) << ambient_name(c.family) << c.n;
    EXPECT_EQ(matrix_order(e.matrix, c.m), c.m);
    EXPECT_EQ(e.matrix.determinant(), e.matrix.field().one());
    // Predicted centralizer: GL_k(q)^r times the tail isometry group.
    BigInt predicted = classical_order(c.family, static_cast<std::uint64_t>(e.centralizer.tail), c.q);
    for (int b : e.centralizer.gl_blocks) predicted *= order_gl_q(static_cast<std::uint64_t>(b), c.q);
    EXPECT_EQ(e.centralizer_order, predicted);
    EXPECT_TRUE(class_size_check(e).exceeds_instance_bound);
  }
}

TEST(Construct, SymplecticNeedsOddOrder) { EXPECT_THROW(construct_element(Ambient::Sp, 8, 4, field(17)), Error); }
