#pragma once

// Square integer matrices indexing the normalized basis of S(n,r), and the
// small vector helpers shared by every module.  Indices are 0-based in code.

#include "qschur/laurent.hpp"

#include <compare>
#include <string>
#include <vector>

namespace qschur {

/// n x n integer matrix, row-major.  Basis indices of S(n,r) have natural
/// entries; intermediate results of the multiplication formulas may carry
/// negative entries, which the formulas then discard.
class ThetaMatrix {
 public:
  ThetaMatrix() = default;
  explicit ThetaMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), 0) {}
  /// Throws DimensionError unless rows form a square matrix.
  explicit ThetaMatrix(const std::vector<std::vector<int>>& rows);

  static ThetaMatrix diag(const IntVector& d);
  /// E_{i,j}: single 1 at (i, j).
  static ThetaMatrix unit(int n, int i, int j);

  int n() const { return n_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  /// sigma(A): sum of all entries.
  int sum() const;
  IntVector row_sums() const;
  IntVector col_sums() const;
  IntVector diagonal() const;

  bool is_natural() const;
  bool is_diagonal() const;
  bool has_zero_diagonal() const;
  /// True if some off-diagonal entry is negative (the formulas' zero convention).
  bool has_negative_off_diagonal() const;

  /// Copy with the diagonal set to zero.
  ThetaMatrix off_diagonal() const;

  std::vector<std::vector<int>> rows() const;

  ThetaMatrix& operator+=(const ThetaMatrix& o);
  ThetaMatrix& operator-=(const ThetaMatrix& o);
  friend ThetaMatrix operator+(ThetaMatrix a, const ThetaMatrix& b) { return a += b; }
  friend ThetaMatrix operator-(ThetaMatrix a, const ThetaMatrix& b) { return a -= b; }
  friend ThetaMatrix operator*(int s, ThetaMatrix a);

  /// Row-major lexicographic order (after n).
  friend auto operator<=>(const ThetaMatrix&, const ThetaMatrix&) = default;
  friend bool operator==(const ThetaMatrix&, const ThetaMatrix&) = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<int> a_;
};

/// ro(A)
inline IntVector ro(const ThetaMatrix& A) { return A.row_sums(); }
/// co(A)
inline IntVector co(const ThetaMatrix& A) { return A.col_sums(); }

/// Strictly upper and strictly lower parts of a zero-diagonal matrix.
/// Throws DomainError on a nonzero diagonal.
std::pair<ThetaMatrix, ThetaMatrix> theta_pm_decompose(const ThetaMatrix& A);

// Vector helpers.
int sigma(const IntVector& x);
int dot(const IntVector& a, const IntVector& b);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector scaled(int s, const IntVector& a);
/// e_i of length n.
IntVector unit_vector(int n, int i);
/// Entrywise a <= b.
bool leq(const IntVector& a, const IntVector& b);
bool is_natural(const IntVector& a);
std::string to_string(const IntVector& a);

/// Lambda(n, r): weak compositions of r into n parts, lexicographic order.
std::vector<IntVector> enumerate_compositions(int n, int r);

/// All x in N^n with x <= bound entrywise (lexicographic order).
std::vector<IntVector> enumerate_box(const IntVector& bound);
/// All x in Z^n with lo <= x_i <= hi.
std::vector<IntVector> enumerate_cube(int n, int lo, int hi);

/// Theta(n, r): natural n x n matrices with entry sum r.
std::vector<ThetaMatrix> enumerate_theta(int n, int r);
/// Zero-diagonal natural n x n matrices with entry sum exactly s.
std::vector<ThetaMatrix> enumerate_theta_pm(int n, int s);

}  // namespace qschur
