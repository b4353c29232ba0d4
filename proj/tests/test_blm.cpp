#include "qschur/blm.hpp"
#include "qschur/errors.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qschur;

namespace {

const IntVector z2{0, 0};

SymbolicElement key(const ThetaMatrix& A, const IntVector& d, const IntVector& l, LaurentPoly c = 1) {
  return SymbolicElement::single(A, d, l, c);
}

TruncatedElement left_product(const SymbolicElement& x, const SymbolicElement& y, int r_max) {
  return multiply(realize(x, r_max), realize(y, r_max));
}

}  // namespace

TEST(Symbolic, Construction) {
  EXPECT_TRUE(key(ThetaMatrix({{0, -1}, {1, 0}}), z2, z2).is_zero());
  EXPECT_THROW((void)key(ThetaMatrix::diag({1, 0}), z2, z2), DomainError);
  EXPECT_THROW((void)key(ThetaMatrix(2), z2, {-1, 0}), DomainError);
  EXPECT_THROW((void)key(ThetaMatrix(2), {0, 0, 0}, z2), DimensionError);
  auto x = key(ThetaMatrix(2), z2, z2) + key(ThetaMatrix(2), z2, z2, -1);
  EXPECT_TRUE(x.is_zero());
}

TEST(Realize, Basics) {
  EXPECT_EQ(realize(key(ThetaMatrix(2), z2, z2), 4), TruncatedElement::unit(2, 4));
  const ThetaMatrix A({{0, 2}, {1, 0}});
  const auto x = realize(key(A, z2, z2), 2);
  for (int r = 0; r <= 2; ++r) EXPECT_TRUE(x.component(r).is_zero());
  EXPECT_EQ(realize(key(ThetaMatrix::unit(2, 0, 1), z2, z2), 1).component(1),
            SchurElement::basis(ThetaMatrix::unit(2, 0, 1)));
}

TEST(Formula1, ZeroMuIsASingleTerm) {
  const ThetaMatrix A({{0, 1, 0}, {2, 0, 0}, {0, 1, 0}});
  const IntVector gamma{1, -2, 1}, delta{0, 1, -1}, lam{1, 0, 2};
  EXPECT_EQ(formula1_product(gamma, {0, 0, 0}, A, delta, lam), key(A, gamma + delta, lam, vpow(dot(ro(A), gamma))));
}

TEST(Formula1, TorusProducts) {
  for (const auto& gamma : enumerate_cube(2, -1, 1))
    for (const auto& mu : enumerate_box({2, 1}))
      for (const auto& lam : enumerate_box({1, 2})) {
        const auto got = realize(formula1_product(gamma, mu, ThetaMatrix(2), z2, lam), 4);
        EXPECT_EQ(got, left_product(key(ThetaMatrix(2), gamma, mu), key(ThetaMatrix(2), z2, lam), 4));
      }
}

TEST(Formula1, RandomInstances) {
  std::mt19937 rng(7);
  auto draw = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int k = 0; k < 30; ++k) {
    const int n = draw(2, 3);
    IntVector gamma(n), mu(n), delta(n), lam(n);
    for (int i = 0; i < n; ++i) {
      gamma[i] = draw(-2, 2);
      mu[i] = draw(0, 2);
      delta[i] = draw(-2, 2);
      lam[i] = draw(0, 2);
    }
    ThetaMatrix A(n);
    for (int s = draw(0, 2); s > 0; --s) {
      const int i = draw(0, n - 1), j = draw(0, n - 1);
      if (i != j) ++A(i, j);
    }
    EXPECT_EQ(realize(formula1_product(gamma, mu, A, delta, lam), 4),
              left_product(key(ThetaMatrix(n), gamma, mu), key(A, delta, lam), 4));
  }
}

TEST(Formula2, GeneratorsOnTheUnit) {
  const auto E12 = ThetaMatrix::unit(2, 0, 1), E21 = ThetaMatrix::unit(2, 1, 0);
  EXPECT_EQ(formula2_E(1, 0, ThetaMatrix(2), z2, z2), key(E12, z2, z2));
  EXPECT_EQ(formula2_F(1, 0, ThetaMatrix(2), z2, z2), key(E21, z2, z2));
}

TEST(Formula2, ZeroPowerIsIdentity) {
  const ThetaMatrix A({{0, 1, 2}, {0, 0, 1}, {1, 0, 0}});
  const IntVector delta{2, -1, 0}, lam{1, 2, 0};
  for (int h = 0; h < 2; ++h) {
    EXPECT_EQ(formula2_E(0, h, A, delta, lam), key(A, delta, lam));
    EXPECT_EQ(formula2_F(0, h, A, delta, lam), key(A, delta, lam));
  }
  EXPECT_THROW((void)formula2_E(1, 2, A, delta, lam), DomainError);
}

TEST(Formula2, MatchesTruncatedProduct) {
  for (int h = 0; h < 2; ++h)
    for (int m = 1; m <= 2; ++m)
      for (const auto& A : enumerate_theta_pm(3, 1))
        for (const auto& lam : enumerate_box({1, 0, 1})) {
          const IntVector delta{1, -2, 0}, zero{0, 0, 0};
          const auto E = key(m * ThetaMatrix::unit(3, h, h + 1), zero, zero);
          const auto F = key(m * ThetaMatrix::unit(3, h + 1, h), zero, zero);
          EXPECT_EQ(realize(formula2_E(m, h, A, delta, lam), 4), left_product(E, key(A, delta, lam), 4));
          EXPECT_EQ(realize(formula2_F(m, h, A, delta, lam), 4), left_product(F, key(A, delta, lam), 4));
        }
}

TEST(DeltaReduce, SingleSteps) {
  const auto x = key(ThetaMatrix(2), {2, 0}, {0, 1});
  const auto y = delta_reduce(x);
  for (const auto& [k, c] : y.terms())
    for (int d : k.delta) EXPECT_TRUE(d == 0 || d == 1);
  EXPECT_EQ(realize(y, 5), realize(x, 5));
  const auto w = key(ThetaMatrix::unit(2, 0, 1), {-1, 3}, {1, 0});
  EXPECT_EQ(realize(delta_reduce(w), 5), realize(w, 5));
  const auto u = key(ThetaMatrix(2), {1, 0}, z2);
  EXPECT_EQ(delta_reduce(u), u);
}

TEST(B1Expand, Examples) {
  const ThetaMatrix A({{0, 1}, {2, 0}});
  const IntVector delta{1, -1};
  EXPECT_EQ(b1_expand(delta, z2, A), key(A, delta, z2, vpow(dot(ro(A), delta))));
  EXPECT_EQ(b1_expand(delta, {2, 1}, ThetaMatrix(2)), key(ThetaMatrix(2), delta, {2, 1}));
  const IntVector lam{1, 2};
  EXPECT_EQ(b1_expand(delta, lam, A), formula1_product(delta, lam, A, z2, z2));
  EXPECT_EQ(realize(b1_expand(delta, lam, A), 5), left_product(key(ThetaMatrix(2), delta, lam), key(A, z2, z2), 5));
}

TEST(Order, Examples) {
  const auto E12 = ThetaMatrix::unit(2, 0, 1);
  EXPECT_FALSE(order_less(E12, E12));
  EXPECT_TRUE(order_less(ThetaMatrix(2), E12));
  EXPECT_FALSE(order_less(E12, ThetaMatrix(2)));
  EXPECT_EQ(norm(ThetaMatrix::unit(3, 0, 2)), 3);
  EXPECT_EQ(norm(ThetaMatrix::unit(3, 2, 0)), 3);
  EXPECT_EQ(norm(ThetaMatrix({{0, 2, 0}, {1, 0, 0}, {0, 0, 0}})), 3);
}

TEST(Triangular, FactorOrder) {
  const auto f = triangular_factors(ThetaMatrix({{0, 1, 2}, {0, 0, 3}, {4, 5, 0}}));
  const std::vector<DividedPower> want{{true, 1, 3}, {true, 0, 2}, {true, 1, 2}, {true, 0, 1},
                                       {false, 1, 4}, {false, 0, 4}, {false, 1, 5}};
  EXPECT_EQ(f, want);
}

TEST(Triangular, Examples) {
  const auto E12 = ThetaMatrix::unit(2, 0, 1);
  const auto single = triangular_product(E12, 4);
  EXPECT_TRUE(single.ok());
  EXPECT_EQ(single.product, key(E12, z2, z2));
  const ThetaMatrix A({{0, 1}, {1, 0}});
  const auto rep = triangular_product(A, 4);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.leading_coeff, LaurentPoly(1));
  EXPECT_GT(rep.product.terms().size(), 1u);
  for (const auto& [k, c] : rep.product.terms())
    if (k.A != A) EXPECT_EQ(k.A, ThetaMatrix(2));
  for (int s = 0; s <= 3; ++s)
    for (const auto& B : enumerate_theta_pm(2, s)) EXPECT_TRUE(triangular_product(B, 4).ok()) << B.to_string();
}

TEST(Truncated, Arithmetic) {
  const auto u = TruncatedElement::unit(2, 3);
  EXPECT_EQ(multiply(u, u), u);
  const auto x = realize(key(ThetaMatrix::unit(2, 0, 1), {1, 0}, {0, 1}), 3);
  EXPECT_EQ(multiply(u, x), x);
  const LaurentPoly d = vpow(1) - vpow(-1);
  EXPECT_EQ((d * x).divided_by(d), x);
  EXPECT_FALSE(x.divided_by(2).has_value());
  EXPECT_THROW((void)multiply(u, TruncatedElement::unit(2, 4)), DimensionError);
}
