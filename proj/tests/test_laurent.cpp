#include "qschur/errors.hpp"
#include "qschur/laurent.hpp"

#include <gtest/gtest.h>

using namespace qschur;

namespace {

const LaurentPoly v = vpow(1);
const LaurentPoly vi = vpow(-1);

}  // namespace

TEST(Laurent, RingArithmetic) {
  EXPECT_EQ((v + vi) * (v - vi), vpow(2) - vpow(-2));
  const LaurentPoly p = LaurentPoly::from_terms({{-3, 2}, {5, -7}});
  EXPECT_EQ(p + LaurentPoly(), p);
  EXPECT_EQ((1 + v) * (1 + v), 1 + LaurentPoly(2) * v + vpow(2));
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Laurent, CanonicalForm) {
  const auto p = LaurentPoly::from_terms({{2, 1}, {2, -1}, {0, 3}});
  EXPECT_EQ(p, LaurentPoly(3));
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_EQ(v.shifted(-1), LaurentPoly(1));
}

TEST(Laurent, BigCoefficients) {
  LaurentPoly p = 1 + v;
  LaurentPoly q = 1;
  for (int k = 0; k < 80; ++k) q *= p;
  Integer binom = 1;
  for (int k = 1; k <= 40; ++k) binom = binom * (80 - k + 1) / k;
  EXPECT_EQ(q.coeff(40), binom);
  EXPECT_GT(q.coeff(40), Integer(std::numeric_limits<std::int64_t>::max()));
}

TEST(Laurent, Bar) {
  EXPECT_EQ(bar(vpow(2) + 3), vpow(-2) + 3);
  const auto p = LaurentPoly::from_terms({{-2, 5}, {1, -1}, {4, 9}});
  EXPECT_EQ(bar(bar(p)), p);
  EXPECT_EQ(bar(balanced_bracket(2)), balanced_bracket(2));
}

TEST(Laurent, ExactDivision) {
  const auto p = (v - vi) * (vpow(3) + 2);
  EXPECT_EQ(divide_exact(p, v - vi), vpow(3) + 2);
  EXPECT_FALSE(divide_exact(vpow(2) + 1, v - vi).has_value());
  EXPECT_THROW((void)divide_exact(v, LaurentPoly()), DomainError);
}

TEST(Laurent, Brackets) {
  EXPECT_EQ(balanced_bracket(2), v + vi);
  EXPECT_TRUE(balanced_bracket(0).is_zero());
  EXPECT_EQ(balanced_bracket(-1), LaurentPoly(-1));
  EXPECT_EQ(unbalanced_bracket(3), vpow(4) + vpow(2) + 1);
  EXPECT_EQ(unbalanced_bracket(1), LaurentPoly(1));
  EXPECT_EQ(unbalanced_bracket(-1), -vpow(-2));
  for (int i = -5; i <= 5; ++i) EXPECT_EQ((v - vi) * balanced_bracket(i), vpow(i) - vpow(-i));
}

TEST(Laurent, Binomials) {
  EXPECT_EQ(balanced_binomial(4, 2), vpow(4) + vpow(2) + 2 + vpow(-2) + vpow(-4));
  EXPECT_EQ(balanced_binomial(3, 0), LaurentPoly(1));
  EXPECT_EQ(balanced_binomial(-1, 1), LaurentPoly(-1));
  for (int N = -6; N <= 6; ++N)
    for (int t = 0; t <= 4; ++t) EXPECT_EQ(unbalanced_binomial(N, t), vpow(t * (N - t)) * balanced_binomial(N, t));
  // Pascal rule [N+1 over t] = v^{-t}[N over t] + v^{N+1-t}[N over t-1]
  for (int N = -5; N <= 5; ++N)
    for (int t = 1; t <= 4; ++t)
      EXPECT_EQ(balanced_binomial(N + 1, t),
                vpow(-t) * balanced_binomial(N, t) + vpow(N + 1 - t) * balanced_binomial(N, t - 1));
}

TEST(Laurent, VectorBinomial) {
  EXPECT_EQ(vector_binomial({2, 2}, {1, 0}), v + vi);
  EXPECT_EQ(vector_binomial({5, -3, 7}, {0, 0, 0}), LaurentPoly(1));
  EXPECT_EQ(vector_binomial({1, 1}, {1, 1}), LaurentPoly(1));
  EXPECT_THROW((void)vector_binomial({1, 1}, {1}), DimensionError);
  EXPECT_THROW((void)vector_binomial({1, 1}, {-1, 0}), DomainError);
}

TEST(Laurent, Trinomial) {
  EXPECT_EQ(trinomial({2}, {1}, {1}, {0}), v + vi);
  EXPECT_EQ(trinomial({3}, {3}, {0}, {0}), LaurentPoly(1));
  EXPECT_EQ(trinomial({3}, {1}, {1}, {1}), balanced_bracket(3) * balanced_bracket(2));
  EXPECT_THROW((void)trinomial({3}, {1}, {1}, {0}), DomainError);
  EXPECT_EQ(unbalanced_trinomial(1, 1, 1), unbalanced_bracket(3) * unbalanced_bracket(2));
}

TEST(Laurent, Evaluate) {
  const auto p = vpow(-1) + LaurentPoly(3) * vpow(2);
  EXPECT_EQ(p.evaluate(Rational(2)), Rational(1, 2) + 12);
}
