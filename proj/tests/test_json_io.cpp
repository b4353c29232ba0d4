#include "qschur/errors.hpp"
#include "qschur/json_io.hpp"

#include <gtest/gtest.h>

using namespace qschur;

TEST(Json, LaurentFormat) {
  EXPECT_EQ(to_json(vpow(-1) + vpow(1)).dump(), "[[-1,1],[1,1]]");
  EXPECT_EQ(laurent_from_json(parse_json("[[2,3],[-1,-4],[2,1]]")), LaurentPoly::from_terms({{2, 4}, {-1, -4}}));
  LaurentPoly big = 1;
  for (int k = 0; k < 90; ++k) big *= LaurentPoly(1) + vpow(1);
  EXPECT_EQ(laurent_from_json(parse_json(to_json(big).dump())), big);
  EXPECT_THROW((void)laurent_from_json(parse_json("[[1]]")), ParseError);
  EXPECT_THROW((void)laurent_from_json(parse_json("[[1,\"x\"]]")), ParseError);
}

TEST(Json, SchurRoundTrip) {
  SchurElement x(2, 3);
  for (const auto& A : enumerate_theta(2, 3)) x.add_term(A, vpow(A(0, 1) - A(1, 0)) + A(0, 0));
  const std::string text = to_json(x).dump();
  EXPECT_EQ(schur_from_json(parse_json(text)), x);
  EXPECT_EQ(to_json(schur_from_json(parse_json(text))).dump(), text);
  EXPECT_EQ(to_json(SchurElement::basis(ThetaMatrix::unit(2, 0, 1))).dump(),
            R"({"n":2,"r":1,"terms":[{"matrix":[[0,1],[0,0]],"coeff":[[0,1]]}]})");
}

TEST(Json, SymbolicRoundTrip) {
  auto x = SymbolicElement::single(ThetaMatrix::unit(3, 0, 2), {1, 0, -1}, {0, 2, 0}, vpow(3) - 2);
  x += SymbolicElement::single(ThetaMatrix(3), {0, 0, 0}, {1, 0, 0});
  const std::string text = to_json(x).dump();
  EXPECT_EQ(symbolic_from_json(parse_json(text), 3), x);
  EXPECT_EQ(to_json(symbolic_from_json(parse_json(text), 3)).dump(), text);
  EXPECT_EQ(symbolic_from_json(parse_json("[]"), 2), SymbolicElement(2));
}

TEST(Json, TruncatedRoundTrip) {
  const auto x = realize(SymbolicElement::single(ThetaMatrix::unit(2, 1, 0), {1, 1}, {1, 0}), 3);
  const std::string text = to_json(x).dump();
  EXPECT_EQ(truncated_from_json(parse_json(text)), x);
}

TEST(Json, Cyclo) {
  const auto c = eval_at_root(vpow(1) + 5, 5) * eval_at_root(vpow(2) - 1, 5).inverse();
  EXPECT_EQ(cyclo_from_json(to_json(c)), c);
  EXPECT_THROW((void)cyclo_from_json(parse_json(R"({"l":3,"coeffs":["1/0"]})")), ParseError);
}

TEST(Json, Errors) {
  EXPECT_THROW((void)parse_json("{"), ParseError);
  EXPECT_THROW((void)schur_from_json(parse_json(R"({"n":2,"terms":[]})")), ParseError);
  EXPECT_THROW((void)schur_from_json(parse_json(R"({"n":2,"r":1,"terms":[{"matrix":[[0,1,0],[0,0]],"coeff":[]}]})")),
               ParseError);
  EXPECT_THROW((void)schur_from_json(parse_json(R"({"n":2,"r":2,"terms":[{"matrix":[[0,1],[0,0]],"coeff":[[0,1]]}]})")),
               DimensionError);
}
