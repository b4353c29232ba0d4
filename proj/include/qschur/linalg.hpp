#pragma once

// Exact rank and kernel computations for finite families of truncated
// elements.  Columns are family members, rows are (degree, basis matrix)
// coordinates.

#include "qschur/cyclo.hpp"
#include "qschur/laurent.hpp"
#include "qschur/theta.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qschur {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Field adaptors for echelon().
inline bool is_zero(const Rational& x) { return x == 0; }
inline Rational inverse(const Rational& x) { return Rational(1) / x; }
inline bool is_zero(const CycloScalar& x) { return x.is_zero(); }
inline CycloScalar inverse(const CycloScalar& x) { return x.inverse(); }

/// Reduced row echelon data of a matrix over a field.
template <class T>
struct Echelon {
  Matrix<T> rref;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> pivot_rows;  // original row index of each pivot
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination.  T needs +, -, *, is_zero(T) and inverse(T).
template <class T>
Echelon<T> echelon(Matrix<T> M) {
  Echelon<T> out;
  const std::size_t rows = M.size();
  const std::size_t cols = rows == 0 ? 0 : M[0].size();
  std::vector<std::size_t> origin(rows);
  for (std::size_t i = 0; i < rows; ++i) origin[i] = i;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(M[p][c])) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    std::swap(origin[p], origin[r]);
    const T inv = inverse(M[r][c]);
    for (std::size_t j = c; j < cols; ++j) M[r][j] = M[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(M[i][c])) continue;
      const T f = M[i][c];
      for (std::size_t j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
    }
    out.pivot_cols.push_back(c);
    out.pivot_rows.push_back(origin[r]);
    ++r;
  }
  out.rref = std::move(M);
  return out;
}

/// Nonzero kernel vector read off from an echelon form, supported on the
/// first non-pivot column and the pivot columns; nullopt at full column rank.
template <class T>
std::optional<std::vector<T>> kernel_vector(const Echelon<T>& e, std::size_t cols, const T& zero, const T& one) {
  std::size_t free_col = cols;
  for (std::size_t c = 0, k = 0; c < cols; ++c) {
    if (k < e.pivot_cols.size() && e.pivot_cols[k] == c) {
      ++k;
      continue;
    }
    free_col = c;
    break;
  }
  if (free_col == cols) return std::nullopt;
  std::vector<T> w(cols, zero);
  w[free_col] = one;
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) w[e.pivot_cols[k]] = zero - e.rref[k][free_col];
  return w;
}

/// Rank of a Laurent matrix over Q(v), certified by evaluation.
struct QvRank {
  std::vector<int> points;             // evaluation points used
  std::vector<std::size_t> ranks;      // exact rank at each point
  std::size_t columns = 0;
  bool independent = false;            // full column rank at some point
  /// When dependent: a kernel vector with Laurent entries, verified exactly
  /// against the whole matrix.
  std::optional<std::vector<LaurentPoly>> kernel;
};

/// Default evaluation points for rank over Q(v).
inline const std::vector<int>& default_eval_points() {
  static const std::vector<int> pts{2, 3, 5, 7};
  return pts;
}

/// Evaluates M at each point and takes exact rational ranks.  Full column rank
/// at any point certifies independence over Q(v).  Otherwise a kernel vector
/// over Z[v,v^-1] is computed from maximal minors (fraction-free elimination)
/// and checked against every row; InternalError if that check fails.
/// cols is passed explicitly so that a matrix without rows still has a width.
QvRank rank_over_Qv(const Matrix<LaurentPoly>& M, std::size_t cols,
                    const std::vector<int>& points = default_eval_points());

/// Determinant over Z[v,v^-1] by Bareiss elimination.  Throws DimensionError
/// unless square.
LaurentPoly determinant(Matrix<LaurentPoly> M);

/// Scales a kernel vector: divides by a common entry when possible and makes
/// the first nonzero entry have positive leading coefficient.
std::vector<LaurentPoly> normalize_kernel(std::vector<LaurentPoly> w);

}  // namespace qschur
