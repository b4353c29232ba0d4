#include "qschur/schur.hpp"

#include "qschur/errors.hpp"

#include <optional>

namespace qschur {

SchurElement diag_mult(const IntVector& lam, const ThetaMatrix& A, Side side) {
  if (static_cast<int>(lam.size()) != A.n()) throw DimensionError("diag_mult: length mismatch");
  if (sigma(lam) != A.sum()) throw DimensionError("diag_mult: degree mismatch");
  SchurElement out(A.n(), A.sum());
  const IntVector& match = side == Side::left ? ro(A) : co(A);
  if (lam == match) out.add_term(A, 1);
  return out;
}

ThetaMatrix b_matrix(int h, int m, const ThetaMatrix& A) {
  ThetaMatrix B = ThetaMatrix::diag(ro(A));
  B(h, h + 1) += m;
  B(h + 1, h + 1) -= m;
  return B;
}

ThetaMatrix c_matrix(int h, int m, const ThetaMatrix& A) {
  ThetaMatrix C = ThetaMatrix::diag(ro(A));
  C(h, h) -= m;
  C(h + 1, h) += m;
  return C;
}

namespace {

void check_row_index(int h, const ThetaMatrix& A) {
  if (h < 0 || h + 1 >= A.n()) throw DomainError("row index h out of range");
  if (!A.is_natural()) throw DomainError("basis matrix must be natural");
}

}  // namespace

SchurElement multiply_Bm(int h, int m, const ThetaMatrix& A) {
  check_row_index(h, A);
  const int n = A.n();
  if (m < 0 || m > ro(A)[static_cast<std::size_t>(h + 1)]) throw DomainError("multiply_Bm: m out of range");
  SchurElement out(n, A.sum());
  for (const auto& t : enumerate_compositions(n, m)) {
    bool admissible = true;
    for (int u = 0; u < n; ++u) admissible = admissible && t[static_cast<std::size_t>(u)] <= A(h + 1, u);
    if (!admissible) continue;
    int beta = 0;
    LaurentPoly coeff = 1;
    ThetaMatrix target = A;
    for (int u = 0; u < n; ++u) {
      const int tu = t[static_cast<std::size_t>(u)];
      if (tu == 0) continue;
      for (int j = u; j < n; ++j) beta += A(h, j) * tu;
      for (int j = u + 1; j < n; ++j) beta -= A(h + 1, j) * tu;
      for (int w = u + 1; w < n; ++w) beta += tu * t[static_cast<std::size_t>(w)];
      coeff *= bar(unbalanced_binomial(A(h, u) + tu, tu));
      target(h, u) += tu;
      target(h + 1, u) -= tu;
    }
    out.add_term(target, coeff.shifted(beta));
  }
  return out;
}

SchurElement multiply_Cm(int h, int m, const ThetaMatrix& A) {
  check_row_index(h, A);
  const int n = A.n();
  if (m < 0 || m > ro(A)[static_cast<std::size_t>(h)]) throw DomainError("multiply_Cm: m out of range");
  SchurElement out(n, A.sum());
  for (const auto& t : enumerate_compositions(n, m)) {
    bool admissible = true;
    for (int u = 0; u < n; ++u) admissible = admissible && t[static_cast<std::size_t>(u)] <= A(h, u);
    if (!admissible) continue;
    int gamma = 0;
    LaurentPoly coeff = 1;
    ThetaMatrix target = A;
    for (int u = 0; u < n; ++u) {
      const int tu = t[static_cast<std::size_t>(u)];
      if (tu == 0) continue;
      for (int j = 0; j <= u; ++j) gamma += A(h + 1, j) * tu;
      for (int j = 0; j < u; ++j) gamma -= A(h, j) * tu;
      for (int w = u + 1; w < n; ++w) gamma += tu * t[static_cast<std::size_t>(w)];
      coeff *= bar(unbalanced_binomial(A(h + 1, u) + tu, tu));
      target(h, u) -= tu;
      target(h + 1, u) += tu;
    }
    out.add_term(target, coeff.shifted(gamma));
  }
  return out;
}

SchurElement element_A(const ThetaMatrix& A, const IntVector& delta, const IntVector& lam, int r) {
  const int n = A.n();
  if (static_cast<int>(delta.size()) != n || static_cast<int>(lam.size()) != n)
    throw DimensionError("element_A: vector length mismatch");
  if (!A.has_zero_diagonal()) throw DomainError("element_A: A must have zero diagonal");
  if (!is_natural(lam)) throw DomainError("element_A: lambda must be natural");
  SchurElement out(n, r);
  if (A.has_negative_off_diagonal()) return out;
  const int rest = r - A.sum();
  if (rest < sigma(lam)) return out;  // [mu over lam] = 0 unless mu >= lam
  for (const auto& mu : enumerate_compositions(n, rest)) {
    if (!leq(lam, mu)) continue;
    out.add_term(A + ThetaMatrix::diag(mu), vector_binomial(mu, lam).shifted(dot(mu, delta)));
  }
  return out;
}

namespace {

// (h, +1) if the only off-diagonal entry of M is at (h, h+1); (h, -1) if at (h+1, h).
std::optional<std::pair<int, int>> divided_power_shape(const ThetaMatrix& M) {
  std::optional<std::pair<int, int>> shape;
  for (int i = 0; i < M.n(); ++i)
    for (int j = 0; j < M.n(); ++j) {
      if (i == j || M(i, j) == 0) continue;
      if (shape) return std::nullopt;
      if (j == i + 1) shape = std::pair(i, +1);
      else if (i == j + 1) shape = std::pair(j, -1);
      else return std::nullopt;
    }
  return shape;
}

}  // namespace

SchurElement basis_product(const ThetaMatrix& A, const ThetaMatrix& B, const ProductOptions& opts) {
  if (A.n() != B.n()) throw DimensionError("basis_product: matrices of different size");
  if (A.sum() != B.sum()) throw DimensionError("basis_product: matrices of different degree");
  if (opts.route == ProductRoute::oracle) return oracle_product(A, B, opts.oracle_cap);
  if (co(A) != ro(B)) return SchurElement(A.n(), A.sum());
  if (A.is_diagonal()) return SchurElement::basis(B);
  if (B.is_diagonal()) return SchurElement::basis(A);
  if (auto shape = divided_power_shape(A)) {
    const auto [h, dir] = *shape;
    const int m = dir > 0 ? A(h, h + 1) : A(h + 1, h);
    const ThetaMatrix expected = dir > 0 ? b_matrix(h, m, B) : c_matrix(h, m, B);
    if (expected != A) throw InternalError("basis_product: divided-power shape does not match B");
    return dir > 0 ? multiply_Bm(h, m, B) : multiply_Cm(h, m, B);
  }
  return oracle_product(A, B, opts.oracle_cap);
}

SchurElement general_product(const SchurElement& x, const SchurElement& y, const ProductOptions& opts) {
  if (x.n() != y.n()) throw DimensionError("general_product: operands of different rank n");
  if (x.degree() != y.degree()) throw DimensionError("general_product: operands of different degree r");
  std::map<IntVector, std::vector<const SchurElement::Terms::value_type*>> by_row;
  for (const auto& term : y.terms()) by_row[ro(term.first)].push_back(&term);
  SchurElement out(x.n(), x.degree());
  for (const auto& [M, c] : x.terms()) {
    auto it = by_row.find(co(M));
    if (it == by_row.end()) continue;
    for (const auto* term : it->second) {
      const LaurentPoly cd = c * term->second;
      const SchurElement part = basis_product(M, term->first, opts);
      for (const auto& [C, e] : part.terms()) out.add_term(C, cd * e);
    }
  }
  return out;
}

}  // namespace qschur
