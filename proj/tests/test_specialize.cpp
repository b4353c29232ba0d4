#include "qschur/errors.hpp"
#include "qschur/specialize.hpp"

#include <gtest/gtest.h>

using namespace qschur;

TEST(Specialize, Unit) {
  for (int l : {1, 3, 5}) {
    const auto u = specialize(TruncatedElement::unit(2, 3), l);
    for (int r = 0; r <= 3; ++r)
      for (const auto& [A, c] : u.component(r).terms()) {
        EXPECT_TRUE(A.is_diagonal());
        EXPECT_EQ(c, CycloScalar::one(l));
      }
  }
  EXPECT_THROW((void)specialize(TruncatedElement::unit(2, 1), 2), DomainError);
}

TEST(Specialize, Homomorphism) {
  const IntVector z{0, 0};
  const auto x = realize(SymbolicElement::single(ThetaMatrix::unit(2, 0, 1), {1, -1}, {1, 0}), 4);
  const auto y = realize(SymbolicElement::single(ThetaMatrix::unit(2, 1, 0), {0, 2}, {0, 1}, vpow(1) + 3), 4);
  for (int l : {1, 3})
    EXPECT_EQ(specialize(multiply(x, y), l), multiply(specialize(x, l), specialize(y, l)));
}

TEST(Specialize, OrderOneIsEvaluationAtOne) {
  const auto x = realize(SymbolicElement::single(ThetaMatrix(2), {1, 0}, {2, 0}), 3);
  const auto s = specialize(x, 1);
  for (int r = 0; r <= 3; ++r)
    for (const auto& [A, c] : x.component(r).terms())
      EXPECT_EQ(s.component(r).terms().at(A).coeffs().at(0), c.evaluate(Rational(1)));
}

TEST(Specialize, KlTrivial) {
  EXPECT_TRUE(check_Kl_trivial(0, 3, 2, 2).holds);
  EXPECT_TRUE(check_Kl_trivial(1, 1, 2, 4).holds);
  EXPECT_TRUE(check_Kl_trivial(1, 5, 3, 4).holds);
  // K_1^2 is not trivial at a cube root of unity.
  const IntVector z{0, 0};
  const auto k2 = specialize(realize(SymbolicElement::single(ThetaMatrix(2), {2, 0}, z), 2), 3);
  EXPECT_FALSE(k2 == specialize(TruncatedElement::unit(2, 2), 3));
}

TEST(Specialize, BkFamily) {
  const auto idx = bk_indices(2, 0);
  ASSERT_EQ(idx.size(), 1u);
  const auto fam = bk_family(2, 0, 3, 3);
  EXPECT_EQ(fam.front(), specialize(TruncatedElement::unit(2, 3), 3));
  const auto v = bk_independence(2, 2, 3, 5);
  EXPECT_TRUE(v.independent());
  EXPECT_FALSE(v.kernel.has_value());
}

TEST(Specialize, ForcedDependency) {
  auto fam = bk_family(2, 1, 3, 4);
  auto extra = fam.front();
  extra *= eval_at_root(vpow(1), 3);
  fam.push_back(extra);
  const auto v = cyclo_independence(fam, 3, 4);
  EXPECT_FALSE(v.independent());
  ASSERT_TRUE(v.kernel.has_value());
}
