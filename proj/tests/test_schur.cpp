#include "qschur/errors.hpp"
#include "qschur/schur.hpp"

#include <gtest/gtest.h>

using namespace qschur;

TEST(Theta, Basics) {
  const ThetaMatrix E12 = ThetaMatrix::unit(2, 0, 1);
  EXPECT_EQ(ro(E12), (IntVector{1, 0}));
  EXPECT_EQ(co(E12), (IntVector{0, 1}));
  const auto [plus, minus] = theta_pm_decompose(ThetaMatrix({{0, 1}, {1, 0}}));
  EXPECT_EQ(plus, E12);
  EXPECT_EQ(minus, ThetaMatrix::unit(2, 1, 0));
  const auto [up, down] = theta_pm_decompose(ThetaMatrix({{0, 2, 1}, {0, 0, 3}, {0, 0, 0}}));
  EXPECT_EQ(up, ThetaMatrix({{0, 2, 1}, {0, 0, 3}, {0, 0, 0}}));
  EXPECT_EQ(down, ThetaMatrix(3));
}

TEST(Theta, Counts) {
  // |Theta(n, r)| = C(n^2 + r - 1, r)
  EXPECT_EQ(enumerate_theta(2, 2).size(), 10u);
  EXPECT_EQ(enumerate_theta(3, 3).size(), 165u);
  EXPECT_EQ(enumerate_theta_pm(3, 2).size(), 21u);
}

TEST(Schur, DiagonalAction) {
  const ThetaMatrix A({{1, 2}, {0, 1}});
  EXPECT_EQ(diag_mult(ro(A), A, Side::left), SchurElement::basis(A));
  EXPECT_TRUE(diag_mult(co(A), A, Side::left).is_zero());
  EXPECT_EQ(diag_mult(co(A), A, Side::right), SchurElement::basis(A));
  EXPECT_THROW((void)diag_mult({1, 1}, A, Side::left), DimensionError);
}

TEST(Schur, RaisingExamples) {
  for (int a = 0; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      const auto A = ThetaMatrix::diag({a, b});
      const auto want = SchurElement::basis(A + ThetaMatrix::unit(2, 0, 1) - ThetaMatrix::unit(2, 1, 1));
      EXPECT_EQ(multiply_Bm(0, 1, A), want);
      EXPECT_EQ(oracle_product(b_matrix(0, 1, A), A), want);
    }
  const ThetaMatrix A({{1, 0}, {1, 1}});
  EXPECT_EQ(multiply_Bm(0, 1, A), oracle_product(b_matrix(0, 1, A), A));
  EXPECT_EQ(multiply_Bm(0, 0, A), SchurElement::basis(A));
  EXPECT_THROW((void)multiply_Bm(0, 3, A), DomainError);
  EXPECT_THROW((void)multiply_Bm(1, 1, A), DomainError);
}

TEST(Schur, LoweringExamples) {
  for (int a = 1; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      const auto A = ThetaMatrix::diag({a, b});
      const auto want = SchurElement::basis(A - ThetaMatrix::unit(2, 0, 0) + ThetaMatrix::unit(2, 1, 0));
      EXPECT_EQ(multiply_Cm(0, 1, A), want);
    }
  for (const auto& A : enumerate_theta(2, 3))
    for (int m = 0; m <= ro(A)[0]; ++m) EXPECT_EQ(multiply_Cm(0, m, A), oracle_product(c_matrix(0, m, A), A));
}

TEST(Schur, FormulasMatchOracleExhaustively) {
  for (int n = 2; n <= 3; ++n)
    for (int r = 0; r <= 3; ++r)
      for (const auto& A : enumerate_theta(n, r))
        for (int h = 0; h + 1 < n; ++h) {
          for (int m = 0; m <= ro(A)[static_cast<std::size_t>(h + 1)]; ++m)
            EXPECT_EQ(multiply_Bm(h, m, A), oracle_product(b_matrix(h, m, A), A));
          for (int m = 0; m <= ro(A)[static_cast<std::size_t>(h)]; ++m)
            EXPECT_EQ(multiply_Cm(h, m, A), oracle_product(c_matrix(h, m, A), A));
        }
}

TEST(Schur, ElementA) {
  // 0(delta, 0, r) = sum_mu v^{mu.delta} [diag mu]
  SchurElement want(2, 2);
  for (const auto& mu : enumerate_compositions(2, 2)) want.add_term(ThetaMatrix::diag(mu), vpow(dot(mu, {1, -2})));
  EXPECT_EQ(element_A(ThetaMatrix(2), {1, -2}, {0, 0}, 2), want);
  EXPECT_EQ(element_A(ThetaMatrix::unit(2, 0, 1), {0, 0}, {0, 0}, 1), SchurElement::basis(ThetaMatrix::unit(2, 0, 1)));
  EXPECT_TRUE(element_A(ThetaMatrix::unit(2, 0, 1), {0, 0}, {0, 0}, 0).is_zero());
  // A(0, lambda, sigma(A) + sigma(lambda)) = [A + diag(lambda)]
  const ThetaMatrix A({{0, 1}, {2, 0}});
  EXPECT_EQ(element_A(A, {0, 0}, {1, 1}, 5), SchurElement::basis(A + ThetaMatrix::diag({1, 1})));
  // Term count: mu with [mu over lambda] != 0.
  EXPECT_EQ(element_A(A, {3, 1}, {1, 0}, 6).terms().size(), 3u);
  EXPECT_THROW((void)element_A(ThetaMatrix::diag({1, 0}), {0, 0}, {0, 0}, 2), DomainError);
}

TEST(Schur, GeneralProduct) {
  SchurElement x(2, 3), y(2, 3);
  for (const auto& A : enumerate_theta(2, 3)) {
    x.add_term(A, vpow(A(0, 1)) + A(1, 0));
    y.add_term(A, LaurentPoly(A(0, 0)) - vpow(-A(1, 1)));
  }
  EXPECT_EQ(general_product(SchurElement::unit(2, 3), x), x);
  EXPECT_EQ(general_product(x, SchurElement::unit(2, 3)), x);
  EXPECT_TRUE(general_product(x, SchurElement(2, 3)).is_zero());
  const ProductOptions oracle{ProductRoute::oracle};
  EXPECT_EQ(general_product(x, y), general_product(x, y, oracle));
  EXPECT_THROW((void)general_product(x, SchurElement::unit(2, 2)), DimensionError);
  EXPECT_THROW((void)general_product(SchurElement::unit(2, 7), SchurElement::unit(2, 7), oracle), ResourceError);
}

TEST(Schur, FastPathMatchesOracle) {
  // [B_1][A] through the dispatch agrees with the oracle for all A in Theta(2,3).
  const ProductOptions oracle{ProductRoute::oracle};
  for (const auto& A : enumerate_theta(2, 3))
    if (ro(A)[1] >= 1) EXPECT_EQ(basis_product(b_matrix(0, 1, A), A), basis_product(b_matrix(0, 1, A), A, oracle));
}
