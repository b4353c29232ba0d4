#include "qschur/linalg.hpp"

#include "qschur/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qschur {

LaurentPoly determinant(Matrix<LaurentPoly> M) {
  const std::size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) throw DimensionError("determinant: matrix is not square");
  if (n == 0) return 1;
  bool negate = false;
  LaurentPoly prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && M[p][k].is_zero()) ++p;
      if (p == n) return 0;
      std::swap(M[p], M[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto q = divide_exact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
        if (!q) throw InternalError("determinant: Bareiss step not exact");
        M[i][j] = std::move(*q);
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return negate ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

std::vector<LaurentPoly> normalize_kernel(std::vector<LaurentPoly> w) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!w[i].is_zero()) order.push_back(i);
  if (order.empty()) return w;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return w[a].term_count() < w[b].term_count(); });
  for (std::size_t d : order) {
    const LaurentPoly divisor = w[d];
    std::vector<LaurentPoly> q(w.size());
    bool all = true;
    for (std::size_t i = 0; i < w.size() && all; ++i) {
      auto r = divide_exact(w[i], divisor);
      if (r) q[i] = std::move(*r);
      else all = false;
    }
    if (all) {
      w = std::move(q);
      break;
    }
  }
  const auto first = std::find_if(w.begin(), w.end(), [](const LaurentPoly& p) { return !p.is_zero(); });
  const int shift = -first->low_degree();
  const bool flip = first->coeff(first->high_degree()) < 0;
  for (auto& p : w) {
    p = p.shifted(shift);
    if (flip) p = -p;
  }
  return w;
}

namespace {

Matrix<Rational> evaluate(const Matrix<LaurentPoly>& M, int point) {
  Matrix<Rational> out(M.size());
  const Rational v(point);
  for (std::size_t i = 0; i < M.size(); ++i) {
    out[i].reserve(M[i].size());
    for (const auto& p : M[i]) out[i].push_back(p.evaluate(v));
  }
  return out;
}

}  // namespace

QvRank rank_over_Qv(const Matrix<LaurentPoly>& M, std::size_t cols, const std::vector<int>& points) {
  QvRank out;
  out.points = points;
  out.columns = cols;
  const std::size_t rows = M.size();
  for (const auto& row : M)
    if (row.size() != cols) throw DimensionError("rank_over_Qv: ragged matrix");
  if (cols == 0) {
    out.independent = true;
    return out;
  }
  std::optional<Echelon<Rational>> best;
  int best_point = 0;
  for (int p : points) {
    auto e = echelon(evaluate(M, p));
    out.ranks.push_back(e.rank());
    if (e.rank() == cols) out.independent = true;
    if (!best || e.rank() > best->rank()) {
      best = std::move(e);
      best_point = p;
    }
  }
  if (out.independent) return out;

  // Kernel support suggested by the best evaluation: the first free column f
  // and the pivot columns it depends on.
  std::size_t f = 0;
  {
    std::size_t k = 0;
    while (f < cols && k < best->pivot_cols.size() && best->pivot_cols[k] == f) {
      ++f;
      ++k;
    }
  }
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < best->pivot_cols.size(); ++k)
    if (!is_zero(best->rref[k][f])) support.push_back(best->pivot_cols[k]);

  // Rows on which the support columns are independent at the chosen point.
  Matrix<Rational> sub_t(support.size(), std::vector<Rational>(rows));
  const Matrix<Rational> at_point = evaluate(M, best_point);
  for (std::size_t k = 0; k < support.size(); ++k)
    for (std::size_t i = 0; i < rows; ++i) sub_t[k][i] = at_point[i][support[k]];
  const auto row_pick = echelon(sub_t).pivot_cols;
  if (row_pick.size() != support.size()) throw InternalError("rank_over_Qv: inconsistent pivot structure");

  // Signed maximal minors of the s x (s+1) block with columns (support..., f).
  std::vector<std::size_t> block_cols = support;
  block_cols.push_back(f);
  const std::size_t s = support.size();
  std::vector<LaurentPoly> w(cols);
  for (std::size_t drop = 0; drop <= s; ++drop) {
    Matrix<LaurentPoly> minor(s);
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = 0; b <= s; ++b)
        if (b != drop) minor[a].push_back(M[row_pick[a]][block_cols[b]]);
    LaurentPoly d = determinant(std::move(minor));
    w[block_cols[drop]] = drop % 2 == 0 ? d : -d;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    LaurentPoly acc;
    for (std::size_t c : block_cols) acc += M[i][c] * w[c];
    if (!acc.is_zero()) throw InternalError("rank_over_Qv: evaluation points missed the generic rank");
  }
  out.kernel = normalize_kernel(std::move(w));
  return out;
}

}  // namespace qschur
