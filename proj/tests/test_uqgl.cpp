#include "qschur/errors.hpp"
#include "qschur/uqgl.hpp"

#include <gtest/gtest.h>

using namespace qschur;

TEST(Words, ParseAndPrint) {
  const auto w = parse_word("E1^(2) K2^-1 [K1;2]*F1 K3", 3);
  const GeneratorWord want{divided_E(0, 2), torus_K(1, -1), torus_binom(0, 2), divided_F(0, 1), torus_K(2, 1)};
  EXPECT_EQ(w, want);
  EXPECT_EQ(parse_word(to_string(w), 3), w);
  EXPECT_TRUE(parse_word("", 2).empty());
  EXPECT_THROW((void)parse_word("E1^(", 2), ParseError);
  EXPECT_THROW((void)parse_word("G1", 2), ParseError);
  EXPECT_THROW((void)parse_word("E2", 2), DomainError);
  EXPECT_THROW((void)parse_word("K3", 2), DomainError);
}

TEST(Zeta, Examples) {
  EXPECT_EQ(zeta(parse_word("K1 K1^-1", 2), 2, 4), TruncatedElement::unit(2, 4));
  EXPECT_EQ(zeta(parse_word("E1", 2), 2, 1).component(1), SchurElement::basis(ThetaMatrix::unit(2, 0, 1)));
  const auto once = zeta(parse_word("E1^(2)", 2), 2, 4);
  const auto twice = zeta(parse_word("E1 E1", 2), 2, 4);
  EXPECT_EQ(twice, balanced_bracket(2) * once);
  EXPECT_EQ(zeta(parse_word("", 3), 3, 2), TruncatedElement::unit(3, 2));
}

TEST(Zeta, SymbolicAgreesWithTruncated) {
  for (const char* text : {"E1 F1", "F1 E1 K2", "[K1;2] E1^(2) F1", "E1 E2 F2^(2) K1^-1", "F2 F1 [K3;1] E2"}) {
    const auto w = parse_word(text, 3);
    EXPECT_EQ(realize(zeta_symbolic(w, 3), 4), zeta(w, 3, 4)) << text;
  }
}

TEST(Relations, AllHoldForRankTwo) {
  const auto rep = check_relations(2, 4);
  EXPECT_TRUE(rep.ok());
  bool saw_e = false;
  for (const auto& inst : rep.instances) {
    EXPECT_TRUE(inst.holds) << inst.relation << " " << inst.label << " " << inst.detail;
    saw_e = saw_e || inst.relation == "e";
  }
  EXPECT_TRUE(saw_e);
}

TEST(Relations, SerreForRankThree) {
  const auto rep = check_relations(3, 3);
  int serre = 0;
  for (const auto& inst : rep.instances)
    if (inst.relation == "f" || inst.relation == "g") {
      ++serre;
      EXPECT_TRUE(inst.holds) << inst.label;
    }
  EXPECT_EQ(serre, 4);
}

TEST(Relations, BrokenRelationIsDetected) {
  // E1 F1 - F1 E1 is not zero: the commutator of (e) is essential.
  const auto ef = zeta(parse_word("E1 F1", 2), 2, 3);
  const auto fe = zeta(parse_word("F1 E1", 2), 2, 3);
  EXPECT_FALSE(ef == fe);
}

TEST(PBW, Words) {
  const PBWIndex idx{ThetaMatrix::unit(2, 0, 1), {1, 0}, {0, 2}};
  EXPECT_EQ(to_string(pbw_word(idx)), "E1 K1 [K2;2]");
  const PBWIndex zero{ThetaMatrix(2), {0, 0}, {0, 0}};
  EXPECT_EQ(pbw_monomial(zero, 3), TruncatedElement::unit(2, 3));
}

TEST(PBW, TriangularFactorsAgree) {
  // The E part of the PBW word for E13 (n = 3) is the ordered factor list.
  const PBWIndex idx{ThetaMatrix::unit(3, 0, 2), {0, 0, 0}, {0, 0, 0}};
  EXPECT_EQ(to_string(pbw_word(idx)), "E1 E2");
  EXPECT_EQ(triangular_factors(ThetaMatrix::unit(3, 0, 2)),
            (std::vector<DividedPower>{{true, 0, 1}, {true, 1, 1}}));
  EXPECT_EQ(triangular_product(ThetaMatrix::unit(3, 0, 2), 4).leading_coeff, LaurentPoly(1));
}

TEST(Independence, SmallCases) {
  const auto x = pbw_monomial({ThetaMatrix::unit(2, 0, 1), {0, 0}, {0, 0}}, 3);
  EXPECT_TRUE(independence_of({x}, 3).independent());
  const auto v = independence_of({x, LaurentPoly(2) * x}, 3);
  EXPECT_FALSE(v.independent());
  ASSERT_TRUE(v.rank.kernel.has_value());
  EXPECT_EQ(*v.rank.kernel, (std::vector<LaurentPoly>{2, -1}));
}

TEST(Independence, SmallPbwFamily) {
  EXPECT_TRUE(independence_check(pbw_indices(2, 1), 2, 5).independent());
}

TEST(Independence, TruncationTooSmallForBoundTwo) {
  // sigma(A) + sigma(lambda) <= 2, n = 2: the A = 0 block alone has 24 members
  // but only 21 diagonal coordinates in degrees r <= 5, so the truncation
  // cannot separate the family.  It separates it once r_max is large enough.
  const auto idx = pbw_indices(2, 2);
  const auto at5 = independence_check(idx, 2, 5);
  EXPECT_FALSE(at5.independent());
  EXPECT_TRUE(at5.rank.kernel.has_value());
  EXPECT_TRUE(independence_check(idx, 2, 7).independent());
}
