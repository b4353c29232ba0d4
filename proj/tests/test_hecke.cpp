#include "qschur/errors.hpp"
#include "qschur/hecke.hpp"

#include <gtest/gtest.h>

using namespace qschur;

namespace {

const LaurentPoly q = vpow(2);

}  // namespace

TEST(Permutation, BasicOperations) {
  const auto s1 = Permutation::simple(3, 1);
  const auto s2 = Permutation::simple(3, 2);
  EXPECT_EQ(s1 * s1, Permutation::identity(3));
  EXPECT_EQ(s1 * s2 * s1, s2 * s1 * s2);
  EXPECT_EQ((s1 * s2).length(), 2);
  EXPECT_EQ(Permutation({3, 2, 1}).length(), 3);
  EXPECT_THROW(Permutation({1, 1, 2}), DomainError);
  for (const auto& w : all_permutations(4)) {
    auto x = Permutation::identity(4);
    for (int i : w.reduced_word()) x = x * Permutation::simple(4, i);
    EXPECT_EQ(x, w);
    EXPECT_EQ(static_cast<int>(w.reduced_word().size()), w.length());
  }
}

TEST(Compositions, Enumeration) {
  EXPECT_EQ(enumerate_compositions(2, 2), (std::vector<IntVector>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(enumerate_compositions(1, 5), (std::vector<IntVector>{{5}}));
  EXPECT_EQ(enumerate_compositions(3, 2).size(), 6u);
}

TEST(Cosets, RowBlocks) {
  EXPECT_EQ(row_blocks({2, 1}, 0), (std::vector<int>{1, 2}));
  EXPECT_EQ(row_blocks({2, 1}, 1), (std::vector<int>{3}));
  EXPECT_TRUE(row_blocks({0, 3}, 0).empty());
  EXPECT_THROW((void)row_blocks({2, 1}, 2), DomainError);
}

TEST(Cosets, DistinguishedRepresentatives) {
  EXPECT_EQ(distinguished_reps({1, 1}, {1, 1}),
            (std::vector<Permutation>{Permutation::identity(2), Permutation::simple(2, 1)}));
  EXPECT_EQ(distinguished_reps({2}, {2}), (std::vector<Permutation>{Permutation::identity(2)}));
  EXPECT_EQ(distinguished_reps({1, 1}, {2}), (std::vector<Permutation>{Permutation::identity(2)}));
  // Each representative is the unique shortest element of its double coset.
  for (const auto& lam : enumerate_compositions(3, 4))
    for (const auto& mu : enumerate_compositions(2, 4))
      for (const auto& d : distinguished_reps(lam, mu)) {
        int shortest = 0;
        for (const auto& w : double_coset(lam, d, mu)) {
          EXPECT_GE(w.length(), d.length());
          if (w.length() == d.length()) ++shortest;
        }
        EXPECT_EQ(shortest, 1);
      }
}

TEST(Cosets, MatrixBijection) {
  EXPECT_EQ(coset_to_matrix({{1, 1}, Permutation::identity(2), {1, 1}}), ThetaMatrix({{1, 0}, {0, 1}}));
  EXPECT_EQ(coset_to_matrix({{1, 1}, Permutation::simple(2, 1), {1, 1}}), ThetaMatrix({{0, 1}, {1, 0}}));
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 4; ++r)
      for (const auto& lam : enumerate_compositions(n, r))
        for (const auto& mu : enumerate_compositions(n, r))
          for (const auto& d : distinguished_reps(lam, mu)) {
            const CosetIndex c{lam, d, mu};
            EXPECT_EQ(matrix_to_coset(coset_to_matrix(c)), c);
          }
  EXPECT_THROW((void)matrix_to_coset(ThetaMatrix({{1, -1}, {0, 1}})), DomainError);
}

TEST(Hecke, QuadraticAndBraidRelations) {
  const auto Ts1 = HeckeElt::basis(Permutation::simple(3, 1));
  const auto Ts2 = HeckeElt::basis(Permutation::simple(3, 2));
  HeckeElt want(3);
  want.add_term(Permutation::simple(3, 1), q - 1);
  want.add_term(Permutation::identity(3), q);
  EXPECT_EQ(Ts1 * Ts1, want);
  EXPECT_EQ(Ts1 * Ts2 * Ts1, Ts2 * Ts1 * Ts2);
  const auto h = LaurentPoly(5) * Ts1 + Ts2;
  EXPECT_EQ(HeckeElt::basis(Permutation::identity(3)) * h, h);
}

TEST(Hecke, Associativity) {
  const auto& S = all_permutations(3);
  for (const auto& a : S)
    for (const auto& b : S)
      for (const auto& c : S) {
        const auto A = HeckeElt::basis(a), B = HeckeElt::basis(b), C = HeckeElt::basis(c);
        EXPECT_EQ((A * B) * C, A * (B * C));
      }
}

TEST(Hecke, YoungSymmetrizers) {
  EXPECT_EQ(x_lambda({1, 1}), HeckeElt::basis(Permutation::identity(2)));
  EXPECT_EQ(x_lambda({2}), HeckeElt::basis(Permutation::identity(2)) + HeckeElt::basis(Permutation::simple(2, 1)));
  EXPECT_EQ(x_lambda({2, 1}), HeckeElt::basis(Permutation::identity(3)) + HeckeElt::basis(Permutation::simple(3, 1)));
  // x_lambda T_s = q x_lambda for s in S_lambda.
  const auto x = x_lambda({2, 1});
  EXPECT_EQ(x.times_simple(1), q * x);
}

TEST(Hecke, DA) {
  EXPECT_EQ(d_A(ThetaMatrix::diag({2, 3})), 0);
  EXPECT_EQ(d_A(ThetaMatrix({{0, 1}, {1, 0}})), 1);
  // d_A = sum over i >= k, j < l of a_ij a_kl; for E_12 + diag(0, 1) no pair qualifies.
  EXPECT_EQ(d_A(ThetaMatrix({{0, 1}, {0, 1}})), 0);
  EXPECT_EQ(d_A(ThetaMatrix({{1, 0}, {1, 0}})), 0);
  EXPECT_EQ(d_A(ThetaMatrix({{0, 0}, {2, 0}})), 0);
  EXPECT_EQ(d_A(ThetaMatrix({{0, 2}, {0, 0}})), 0);
  EXPECT_EQ(d_A(ThetaMatrix({{1, 1}, {1, 1}})), 3);
}

TEST(Oracle, SmallProducts) {
  // [E12] [E21] = [E11] for n = 2, r = 1.
  const auto x = oracle_product(ThetaMatrix({{0, 1}, {0, 0}}), ThetaMatrix({{0, 0}, {1, 0}}));
  EXPECT_EQ(x, SchurElement::basis(ThetaMatrix({{1, 0}, {0, 0}})));
  // co(A) != ro(B) gives zero.
  EXPECT_TRUE(oracle_product(ThetaMatrix({{0, 1}, {0, 0}}), ThetaMatrix({{0, 1}, {0, 0}})).is_zero());
  // Diagonal elements are orthogonal idempotents.
  for (const auto& lam : enumerate_compositions(2, 3))
    EXPECT_EQ(oracle_product(ThetaMatrix::diag(lam), ThetaMatrix::diag(lam)),
              SchurElement::basis(ThetaMatrix::diag(lam)));
}

TEST(Oracle, Associativity) {
  const auto mats = enumerate_theta(2, 3);
  for (const auto& A : mats)
    for (const auto& B : mats)
      for (const auto& C : mats) {
        if (co(A) != ro(B) || co(B) != ro(C)) continue;
        SchurElement left(2, 3), right(2, 3);
        const auto ab = oracle_product(A, B), bc = oracle_product(B, C);
        for (const auto& [M, c] : ab.terms()) left += c * oracle_product(M, C);
        for (const auto& [M, c] : bc.terms()) right += c * oracle_product(A, M);
        EXPECT_EQ(left, right);
      }
}

TEST(Oracle, Errors) {
  EXPECT_THROW((void)oracle_product(ThetaMatrix::diag({7, 0}), ThetaMatrix::diag({7, 0})), ResourceError);
  EXPECT_THROW((void)oracle_product(ThetaMatrix::diag({1, 0}), ThetaMatrix::diag({1, 0, 0})), DimensionError);
  EXPECT_THROW((void)oracle_product(ThetaMatrix::diag({1, 0}), ThetaMatrix::diag({2, 0})), DimensionError);
}
