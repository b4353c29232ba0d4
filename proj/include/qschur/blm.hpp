#pragma once

// The integral realization V(n) inside the product of all S(n,r): symbolic
// elements A(delta, lambda), their truncated images, and the closed-form
// multiplication rules for left factors 0(gamma, mu), (mE_{h,h+1})(0) and
// (mE_{h+1,h})(0).

#include "qschur/schur.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qschur {

/// Index (A, delta, lambda) of the symbol A(delta, lambda).
struct BlmKey {
  ThetaMatrix A;
  IntVector delta;
  IntVector lam;
  friend auto operator<=>(const BlmKey&, const BlmKey&) = default;
  friend bool operator==(const BlmKey&, const BlmKey&) = default;
};

/// Finite Z[v,v^-1]-combination of symbols A(delta, lambda).
class SymbolicElement {
 public:
  using Terms = std::map<BlmKey, LaurentPoly>;

  SymbolicElement() = default;
  explicit SymbolicElement(int n) : n_(n) {}
  /// c * A(delta, lam).  Zero when A has a negative off-diagonal entry.
  static SymbolicElement single(const ThetaMatrix& A, const IntVector& delta, const IntVector& lam,
                                LaurentPoly c = 1);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const BlmKey& k) const;

  /// Adds c * A(delta, lam).  Keys with a negative off-diagonal entry are zero
  /// and dropped; a nonzero diagonal or negative lambda entry throws DomainError,
  /// a size mismatch DimensionError.
  void add_term(const BlmKey& k, const LaurentPoly& c);

  SymbolicElement& operator+=(const SymbolicElement& o);
  SymbolicElement& operator-=(const SymbolicElement& o);
  SymbolicElement& operator*=(const LaurentPoly& c);
  friend SymbolicElement operator+(SymbolicElement a, const SymbolicElement& b) { return a += b; }
  friend SymbolicElement operator-(SymbolicElement a, const SymbolicElement& b) { return a -= b; }
  friend SymbolicElement operator*(const LaurentPoly& c, SymbolicElement a) { return a *= c; }
  friend bool operator==(const SymbolicElement&, const SymbolicElement&) = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  Terms terms_;
};

/// (x_r) for 0 <= r <= r_max with x_r in S(n,r).
class TruncatedElement {
 public:
  TruncatedElement() = default;
  /// The zero family.
  TruncatedElement(int n, int r_max);
  static TruncatedElement unit(int n, int r_max);

  int n() const { return n_; }
  int r_max() const { return static_cast<int>(components_.size()) - 1; }
  const std::vector<SchurElement>& components() const { return components_; }
  const SchurElement& component(int r) const { return components_.at(static_cast<std::size_t>(r)); }
  SchurElement& component(int r) { return components_.at(static_cast<std::size_t>(r)); }
  bool is_zero() const;

  TruncatedElement& operator+=(const TruncatedElement& o);
  TruncatedElement& operator-=(const TruncatedElement& o);
  TruncatedElement& operator*=(const LaurentPoly& c);
  friend TruncatedElement operator+(TruncatedElement a, const TruncatedElement& b) { return a += b; }
  friend TruncatedElement operator-(TruncatedElement a, const TruncatedElement& b) { return a -= b; }
  friend TruncatedElement operator*(const LaurentPoly& c, TruncatedElement a) { return a *= c; }
  friend bool operator==(const TruncatedElement&, const TruncatedElement&) = default;

  /// Every coefficient divided exactly by d, or nullopt if some division is not exact.
  std::optional<TruncatedElement> divided_by(const LaurentPoly& d) const;

 private:
  void check_compatible(const TruncatedElement& o) const;

  int n_ = 0;
  std::vector<SchurElement> components_;
};

/// Componentwise product via general_product.  Components are independent
/// and are evaluated concurrently.
TruncatedElement multiply(const TruncatedElement& x, const TruncatedElement& y, const ProductOptions& opts = {});

/// Componentwise image of x: A(delta, lam) goes to (A(delta, lam, r))_{r <= r_max}.
TruncatedElement realize(const SymbolicElement& x, int r_max);

/// 0(gamma, mu) * A(delta, lam).
SymbolicElement formula1_product(const IntVector& gamma, const IntVector& mu, const ThetaMatrix& A,
                                 const IntVector& delta, const IntVector& lam);
/// (m E_{h,h+1})(0) * A(delta, lam), h 0-based.  Throws DomainError unless 0 <= h <= n-2.
SymbolicElement formula2_E(int m, int h, const ThetaMatrix& A, const IntVector& delta, const IntVector& lam);
/// (m E_{h+1,h})(0) * A(delta, lam).
SymbolicElement formula2_F(int m, int h, const ThetaMatrix& A, const IntVector& delta, const IntVector& lam);

/// Bilinear extensions to a symbolic right factor.
SymbolicElement torus_times(const IntVector& gamma, const IntVector& mu, const SymbolicElement& x);
SymbolicElement raise_times(int m, int h, const SymbolicElement& x);
SymbolicElement lower_times(int m, int h, const SymbolicElement& x);

/// Rewrites x so that every key has delta in {0,1}^n, using
///   A(d, l) = v^{l_i}(v^{l_i+1} - v^{-l_i-1}) A(d - e_i, l + e_i) + v^{2 l_i} A(d - 2e_i, l)     (d_i >= 2)
///   A(d, l) = -v^{-l_i}(v^{l_i+1} - v^{-l_i-1}) A(d + e_i, l + e_i) + v^{-2 l_i} A(d + 2e_i, l)  (d_i <= -1).
SymbolicElement delta_reduce(const SymbolicElement& x);

/// 0(delta, lam) * A(0) written in the keys A'(delta', lam').
SymbolicElement b1_expand(const IntVector& delta, const IntVector& lam, const ThetaMatrix& A);

/// Strict order B < A: sigma_{i,j}(B) <= sigma_{i,j}(A) and sigma_{j,i}(B) <= sigma_{j,i}(A)
/// for all i < j, with at least one strict inequality.
bool order_less(const ThetaMatrix& B, const ThetaMatrix& A);
/// sum over r != s of (|s-r|)(|s-r|+1)/2 * a_{r,s}.
int norm(const ThetaMatrix& A);

/// A single divided-power factor (m E_{h,h+1})(0) or (m E_{h+1,h})(0); h 0-based.
struct DividedPower {
  bool raising;
  int h;
  int m;
  friend bool operator==(const DividedPower&, const DividedPower&) = default;
};

/// The ordered factors E^{(A+)} followed by F^{(A-)}, with E^{(A+)} = M_n ... M_2
/// and F^{(A-)} = M'_2 ... M'_n.  Factors with m = 0 are omitted.
std::vector<DividedPower> triangular_factors(const ThetaMatrix& A);

/// Symbolic product of the factors, accumulated right to left with the
/// closed-form rules and then reduced to delta in {0,1}^n.
SymbolicElement ordered_product(const std::vector<DividedPower>& factors, int n);

struct TriangularReport {
  ThetaMatrix A;
  SymbolicElement product;        // delta-reduced symbolic product
  LaurentPoly leading_coeff;      // coefficient of A(0, 0)
  bool leading_ok = false;        // leading_coeff == 1
  bool lower_terms_ok = false;    // every other key (B, d, l) has B < A and ||B|| < ||A||
  bool realized_ok = false;       // realize(product) equals the truncated product of the factors
  std::vector<std::string> violations;
  bool ok() const { return leading_ok && lower_terms_ok && realized_ok; }
};

/// Checks the triangular relation for A at truncation r_max.
TriangularReport triangular_product(const ThetaMatrix& A, int r_max);

}  // namespace qschur
