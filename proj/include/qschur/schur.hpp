#pragma once

// Structured multiplication in the q-Schur algebra S(n,r) on the normalized
// basis [A]: the diagonal action, the divided-power formulas for [B_m] and
// [C_m], and the elements A(delta, lambda, r).

#include "qschur/hecke.hpp"
#include "qschur/schur_element.hpp"

namespace qschur {

enum class Side { left, right };

/// [diag(lam)] * [A] (side = left) or [A] * [diag(lam)] (side = right): [A] when
/// lam equals ro(A) resp. co(A), zero otherwise.  Throws DimensionError when
/// sigma(lam) != sigma(A).
SchurElement diag_mult(const IntVector& lam, const ThetaMatrix& A, Side side);

/// B_m = diag(ro A) + m E_{h,h+1} - m E_{h+1,h+1}  (h is 0-based).
ThetaMatrix b_matrix(int h, int m, const ThetaMatrix& A);
/// C_m = diag(ro A) - m E_{h,h} + m E_{h+1,h}.
ThetaMatrix c_matrix(int h, int m, const ThetaMatrix& A);

/// [B_m] * [A] by the divided-power raising formula.  Requires 0 <= h <= n-2 and
/// 0 <= m <= ro(A)_{h+1}; otherwise throws DomainError.
SchurElement multiply_Bm(int h, int m, const ThetaMatrix& A);
/// [C_m] * [A] by the divided-power lowering formula; 0 <= m <= ro(A)_h.
SchurElement multiply_Cm(int h, int m, const ThetaMatrix& A);

/// A(delta, lam, r) = sum_{mu in Lambda(n, r - sigma A)} v^{mu.delta} [mu over lam] [A + diag mu].
/// Zero when r < sigma(A) or when A has a negative off-diagonal entry.
/// Throws DomainError if A has a nonzero diagonal or lam is not natural.
SchurElement element_A(const ThetaMatrix& A, const IntVector& delta, const IntVector& lam, int r);

enum class ProductRoute {
  /// Divided-power formulas or the diagonal action where the factors allow, Hecke oracle otherwise.
  automatic,
  /// Always the Hecke oracle.
  oracle,
};

struct ProductOptions {
  ProductRoute route = ProductRoute::automatic;
  int oracle_cap = kDefaultOracleCap;
};

/// Bilinear product in S(n,r).  Throws DimensionError on mismatched n or r and
/// ResourceError when an oracle fallback exceeds the cap.
SchurElement general_product(const SchurElement& x, const SchurElement& y, const ProductOptions& opts = {});

/// [A] * [B] for a single pair of basis matrices via the same dispatch.
SchurElement basis_product(const ThetaMatrix& A, const ThetaMatrix& B, const ProductOptions& opts = {});

}  // namespace qschur
