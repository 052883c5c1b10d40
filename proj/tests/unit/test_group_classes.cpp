#include "fuchs/classes.hpp"
#include "fuchs/error.hpp"
#include "fuchs/group.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace fuchs;

TEST(Closure, SymmetricGroupOnThreePoints) {
  const auto g = closure({GroupElement::from_cycles(3, {{1, 2}}), GroupElement::from_cycles(3, {{1, 2, 3}})});
  EXPECT_EQ(g.order(), 6u);
}

TEST(Closure, ElementaryMatricesGenerateSL25) {
  const auto f = field_make(5);
  Matrix e12 = Matrix::identity(f, 2), e21 = Matrix::identity(f, 2);
  e12.set(0, 1, f->one());
  e21.set(1, 0, f->one());
  EXPECT_EQ(closure({GroupElement::matrix(e12), GroupElement::matrix(e21)}).order(), 120u);
}

TEST(Closure, CapExceeded) {
  try {
    closure({GroupElement::from_cycles(5, {{1, 2}}), GroupElement::from_cycles(5, {{1, 2, 3, 4, 5}})}, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(StandardGroup, OrdersMatchClosedForms) {
  EXPECT_EQ(standard_group(parse_group_spec("SL(2,5)")).order(), 120u);
  EXPECT_EQ(standard_group(parse_group_spec("PSL(2,7)")).order(), 168u);
  const char* specs[] = {"C(5)", "S(3)", "S(4)", "A(4)", "A(5)", "D(4)", "SL(2,3)", "SL(2,4)", "SL(2,9)", "GL(2,3)", "GL(2,4)",
                         "GL(3,2)", "PSL(2,8)", "PSL(3,2)", "Sp(4,2)", "SL(3,3)"};
  for (const char* s : specs) {
    const auto spec = parse_group_spec(s);
    EXPECT_EQ(BigInt(standard_group(spec).order()), group_order_formula(spec)) << s;
  }
}

TEST(StandardGroup, Sp43OrderFormula) { EXPECT_EQ(group_order_formula(parse_group_spec("Sp(4,3)")), BigInt(51840)); }

TEST(Classes, TextbookExamples) {
  const auto s3 = standard_group(parse_group_spec("S(3)"));
  const auto d = conjugacy_classes(s3);
  ASSERT_EQ(d.size(), 3u);
  std::multiset<std::uint64_t> sizes;
  for (const auto& c : d.classes) sizes.insert(c.size);
  EXPECT_EQ(sizes, (std::multiset<std::uint64_t>{1, 2, 3}));
  const auto c5 = standard_group(parse_group_spec("C(5)"));
  EXPECT_EQ(conjugacy_classes(c5).size(), 5u);
  EXPECT_EQ(conjugacy_classes(standard_group(parse_group_spec("SL(2,5)"))).size(), 9u);
}

TEST(Classes, StructureConstantsOfS3) {
  const auto g = standard_group(parse_group_spec("S(3)"));
  const auto d = conjugacy_classes(g);
  std::size_t trans = 0, three = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.classes[i].element_order == 2) trans = i;
    if (d.classes[i].element_order == 3) three = i;
  }
  EXPECT_EQ(structure_constant(g, d, trans, trans, 0), 3u);
  // Every transposition x gives a transposition x^-1 z for a fixed 3-cycle z; the class equation
  // a(t,t,1)*1 + a(t,t,3)*2 = |t|^2 = 9 pins the value at 3.
  EXPECT_EQ(structure_constant(g, d, trans, trans, three), 3u);
  for (std::size_t j = 0; j < d.size(); ++j) {
    for (std::size_t k = 0; k < d.size(); ++k) EXPECT_EQ(structure_constant(g, d, 0, j, k), j == k ? 1u : 0u);
  }
}

TEST(Classes, CentralizerExamples) {
  const auto g = standard_group(parse_group_spec("S(3)"));
  EXPECT_EQ(centralizer_order(g, g.identity()), 6u);
  EXPECT_EQ(centralizer_order(g, GroupElement::from_cycles(3, {{1, 2}})), 2u);
}

class ClassInvariants : public ::testing::TestWithParam<const char*> {};

TEST_P(ClassInvariants, ClassEquationSymmetryAndPowerMaps) {
  const auto g = standard_group(parse_group_spec(GetParam()));
  const auto d = conjugacy_classes(g);
  std::uint64_t total = 0;
  for (const auto& c : d.classes) {
    total += c.size;
    EXPECT_EQ(c.size * centralizer_order(g, c.representative), g.order());
  }
  EXPECT_EQ(total, g.order());

  const auto tensor = structure_tensor(g, d);
  const std::size_t r = d.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::uint64_t lhs = 0;
      for (std::size_t k = 0; k < r; ++k) lhs += tensor[(i * r + j) * r + k] * d.classes[k].size;
      EXPECT_EQ(lhs, d.classes[i].size * d.classes[j].size);
    }
  }

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
  for (int s = 0; s < 100; ++s) {
    const ElementId x = pick(rng);
    const std::uint64_t k = rng() % 50;
    EXPECT_EQ(d.class_of[g.power(x, k)], d.power_class(d.class_of[x], k));
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, ClassInvariants,
                         ::testing::Values("C(5)", "S(3)", "S(4)", "A(5)", "D(4)", "SL(2,3)", "SL(2,5)", "PSL(2,7)", "GL(2,3)"));
