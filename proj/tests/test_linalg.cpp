#include "qschur/errors.hpp"
#include "qschur/linalg.hpp"

#include <gtest/gtest.h>

using namespace qschur;

namespace {

const LaurentPoly v = vpow(1);

}  // namespace

TEST(Echelon, RationalRank) {
  Matrix<Rational> M{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  const auto e = echelon(M);
  EXPECT_EQ(e.rank(), 2u);
  const auto w = kernel_vector(e, 3, Rational(0), Rational(1));
  ASSERT_TRUE(w.has_value());
  for (const auto& row : M) {
    Rational s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += row[j] * (*w)[j];
    EXPECT_EQ(s, 0);
  }
  EXPECT_FALSE(kernel_vector(echelon(Matrix<Rational>{{1, 0}, {0, 1}}), 2, Rational(0), Rational(1)).has_value());
}

TEST(Determinant, Laurent) {
  Matrix<LaurentPoly> M{{v, 1}, {1, vpow(-1)}};
  EXPECT_TRUE(determinant(M).is_zero());
  Matrix<LaurentPoly> N{{v, 1, 0}, {0, v, 1}, {1, 0, v}};
  EXPECT_EQ(determinant(N), vpow(3) + 1);
  EXPECT_THROW((void)determinant(Matrix<LaurentPoly>{{v, 1}}), DimensionError);
}

TEST(RankOverQv, Singleton) {
  const auto r = rank_over_Qv({{v + 1}, {LaurentPoly()}}, 1);
  EXPECT_TRUE(r.independent);
  EXPECT_FALSE(r.kernel.has_value());
}

TEST(RankOverQv, ForcedDependency) {
  // Columns x and 2x.
  const LaurentPoly x = vpow(2) - 3;
  const auto r = rank_over_Qv({{x, LaurentPoly(2) * x}, {v * x, LaurentPoly(2) * v * x}}, 2);
  EXPECT_FALSE(r.independent);
  ASSERT_TRUE(r.kernel.has_value());
  EXPECT_EQ(*r.kernel, (std::vector<LaurentPoly>{2, -1}));
}

TEST(RankOverQv, DependencyOnlyOverQv) {
  // Columns (1, v) and (v, v^2): dependent, kernel (v, -1) up to a unit.
  const auto r = rank_over_Qv({{1, v}, {v, vpow(2)}}, 2);
  EXPECT_FALSE(r.independent);
  ASSERT_TRUE(r.kernel.has_value());
  EXPECT_EQ(*r.kernel, (std::vector<LaurentPoly>{1, -vpow(-1)}));
}

TEST(RankOverQv, Independent) {
  // (1, v) and (1, v^2) are independent although they agree at v = 1.
  const auto r = rank_over_Qv({{1, 1}, {v, vpow(2)}}, 2);
  EXPECT_TRUE(r.independent);
}

TEST(RankOverQv, NoRows) {
  const auto r = rank_over_Qv({}, 2);
  EXPECT_FALSE(r.independent);
  ASSERT_TRUE(r.kernel.has_value());
}

TEST(Normalize, Kernel) {
  const auto w = normalize_kernel({LaurentPoly(2) * vpow(3), LaurentPoly(-4) * vpow(3)});
  EXPECT_EQ(w, (std::vector<LaurentPoly>{1, -2}));
}
