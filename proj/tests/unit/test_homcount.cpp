#include "fuchs/chartab.hpp"
#include "fuchs/classes.hpp"
#include "fuchs/error.hpp"
#include "fuchs/homcount.hpp"
#include "fuchs/signature.hpp"

#include <gtest/gtest.h>

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

std::size_t class_with_order(const ClassData& d, std::uint32_t order) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.classes[i].element_order == order) return i;
  }
  return d.size();
}

BigInt oracle(const FuchsianSignature& sig, const Loaded& l, std::optional<ClassTuple> tup = std::nullopt, bool exact = false) {
  OracleOptions o;
  o.classes = std::move(tup);
  o.exact_orders = exact;
  return oracle_hom_count(sig, l.group, l.classes, o);
}

}  // namespace

TEST(HomCount, TranspositionsIntoThreeCycle) {
  const auto l = load("S(3)");
  const std::size_t t = class_with_order(l.classes, 2), c = class_with_order(l.classes, 3);
  const auto sig = parse_signature("o:g=0:m=2,2,3");
  EXPECT_EQ(hom_count_classes(sig, l.table, {t, t, c}), 6);
  EXPECT_EQ(oracle(sig, l, ClassTuple{t, t, c}), 6);
}

TEST(HomCount, OrientedGenusTwoIntoC3) {
  const auto l = load("C(3)");
  EXPECT_EQ(hom_count_total(parse_signature("o:g=2"), l.table), 81);
  EXPECT_EQ(oracle(parse_signature("o:g=2"), l), 81);
}

TEST(HomCount, SpecExamplesOnS3) {
  const auto l = load("S(3)");
  EXPECT_EQ(hom_count_total(parse_signature("o:g=0:m=2,2,2"), l.table), 10);
  EXPECT_EQ(oracle(parse_signature("o:g=0:m=2,2,2"), l), 10);
  EXPECT_EQ(hom_count_total(parse_signature("o:g=1"), l.table), 18);
  EXPECT_EQ(hom_count_total(parse_signature("o:g=0:m=2,3"), l.table), 1);
  const auto klein = parse_signature("n:g=1:m=2,2");
  EXPECT_EQ(hom_count_total(klein, l.table), oracle(klein, l));
}

TEST(HomCount, HurwitzIntoPSL27MatchesOracle) {
  const auto l = load("PSL(2,7)");
  const auto sig = parse_signature("o:g=0:m=2,3,7");
  const BigInt f = hom_count_total(sig, l.table);
  EXPECT_GT(f, 0);
  EXPECT_EQ(f, oracle(sig, l));
}

TEST(HomCount, DisjointPrimeSetsAgree) {
  for (const char* g : {"S(4)", "SL(2,5)", "PSL(2,7)"}) {
    const auto l = load(g);
    for (const char* s : {"o:g=0:m=2,3,7", "o:g=0:m=2,2,2,2", "n:g=2", "o:g=2:m=3"}) {
      const auto sig = parse_signature(s);
      FormulaOptions shifted;
      shifted.prime_offset = 5;
      EXPECT_EQ(hom_count_total(sig, l.table), hom_count_total(sig, l.table, shifted)) << g << " " << s;
    }
  }
}

TEST(HomCount, FactoredTotalEqualsTupleSum) {
  for (const char* g : {"S(4)", "A(5)", "SL(2,3)"}) {
    const auto l = load(g);
    for (const char* s : {"o:g=0:m=2,3,5", "n:g=1:m=2,2", "o:g=1:m=3", "o:g=0:m=2,2,2,2"}) {
      const auto sig = parse_signature(s);
      EXPECT_EQ(hom_count_total(sig, l.table), hom_count_total_by_tuples(sig, l.table)) << g << " " << s;
      FormulaOptions exact;
      exact.exact_orders = true;
      EXPECT_EQ(hom_count_total(sig, l.table, exact), hom_count_total_by_tuples(sig, l.table, exact)) << g << " " << s;
    }
  }
}

TEST(HomCount, FormulaEqualsOracleOnSmallGrid) {
  for (const char* g : {"S(3)", "D(4)", "A(4)", "SL(2,3)"}) {
    const auto l = load(g);
    for (const char* s : {"o:g=0:m=2,2,2", "o:g=0:m=2,3,3", "o:g=1:m=2", "n:g=1:m=2,2", "n:g=2", "n:g=3", "o:g=2"}) {
      const auto sig = parse_signature(s);
      EXPECT_EQ(hom_count_total(sig, l.table), oracle(sig, l)) << g << " " << s;
      FormulaOptions exact;
      exact.exact_orders = true;
      EXPECT_EQ(hom_count_total(sig, l.table, exact), oracle(sig, l, std::nullopt, true)) << g << " " << s;
      if (sig.periods.size() != 3) continue;
      for (std::size_t i = 0; i < l.classes.size(); ++i) {
        for (std::size_t j = 0; j < l.classes.size(); ++j) {
          for (std::size_t k = 0; k < l.classes.size(); ++k) {
            const ClassTuple tup{i, j, k};
            EXPECT_EQ(hom_count_classes(sig, l.table, tup), oracle(sig, l, tup)) << g << " " << s;
          }
        }
      }
    }
  }
}

TEST(HomCount, LargerPeriodsNeverDecreaseTheCount) {
  const auto l = load("S(4)");
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"o:g=0:m=2,2,2", "o:g=0:m=4,2,2"}, {"o:g=0:m=2,3,3", "o:g=0:m=2,6,3"}, {"o:g=0:m=2,2,2", "o:g=0:m=12,12,12"},
      {"n:g=1:m=2", "n:g=1:m=4"},         {"o:g=1:m=3", "o:g=1:m=6"}};
  for (const auto& [small, large] : pairs) {
    EXPECT_LE(hom_count_total(parse_signature(small), l.table), hom_count_total(parse_signature(large), l.table)) << small;
  }
}

TEST(HomCount, TrivialPeriodForcesIdentity) {
  const auto l = load("S(4)");
  FuchsianSignature with_one{2, 1, {1}}, without{2, 1, {}};
  EXPECT_EQ(oracle(with_one, l), oracle(without, l));
  EXPECT_EQ(hom_count_total(with_one, l.table), hom_count_total(without, l.table));
  FuchsianSignature tri{2, 0, {2, 1, 2}}, pair{2, 0, {2, 2}};
  EXPECT_EQ(oracle(tri, l), oracle(pair, l));
}

TEST(HomCount, OracleThreadCountIsIrrelevant) {
  const auto l = load("A(5)");
  const auto sig = parse_signature("o:g=0:m=2,3,5");
  OracleOptions one, four;
  four.threads = 4;
  EXPECT_EQ(oracle_hom_count(sig, l.group, l.classes, one), oracle_hom_count(sig, l.group, l.classes, four));
}

TEST(HomCount, OracleRefusesOverCap) {
  const auto l = load("A(5)");
  OracleOptions o;
  o.cost_cap = 1000;
  try {
    oracle_hom_count(parse_signature("o:g=2"), l.group, l.classes, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooExpensive);
  }
}

TEST(Epi, Examples) {
  const auto psl = load("PSL(2,7)");
  const auto h = epi_count(parse_signature("o:g=0:m=2,3,7"), psl.group, psl.classes);
  EXPECT_GT(h.epi, 0);
  EXPECT_GT(h.probability, 0);
  EXPECT_LE(h.probability, 1);
  const auto s3 = load("S(3)");
  EXPECT_EQ(epi_count(parse_signature("o:g=0:m=2,2,2"), s3.group, s3.classes).epi, 0);
  const auto one = load("C(1)");
  const auto t = epi_count(parse_signature("o:g=0:m=2,3,7"), one.group, one.classes);
  EXPECT_EQ(t.hom, 1);
  EXPECT_EQ(t.epi, 1);
  EXPECT_EQ(t.probability, 1);
}
