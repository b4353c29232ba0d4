#include "qschur/theta.hpp"

#include "qschur/errors.hpp"

#include <numeric>
#include <sstream>

namespace qschur {

ThetaMatrix::ThetaMatrix(const std::vector<std::vector<int>>& rows) : n_(static_cast<int>(rows.size())) {
  a_.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw DimensionError("ThetaMatrix: rows must form a square matrix");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

ThetaMatrix ThetaMatrix::diag(const IntVector& d) {
  ThetaMatrix A(static_cast<int>(d.size()));
  for (int i = 0; i < A.n_; ++i) A(i, i) = d[static_cast<std::size_t>(i)];
  return A;
}

ThetaMatrix ThetaMatrix::unit(int n, int i, int j) {
  ThetaMatrix A(n);
  A(i, j) = 1;
  return A;
}

int ThetaMatrix::sum() const { return std::accumulate(a_.begin(), a_.end(), 0); }

IntVector ThetaMatrix::row_sums() const {
  IntVector r(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[static_cast<std::size_t>(i)] += (*this)(i, j);
  return r;
}

IntVector ThetaMatrix::col_sums() const {
  IntVector c(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) c[static_cast<std::size_t>(j)] += (*this)(i, j);
  return c;
}

IntVector ThetaMatrix::diagonal() const {
  IntVector d(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) d[static_cast<std::size_t>(i)] = (*this)(i, i);
  return d;
}

bool ThetaMatrix::is_natural() const {
  for (int x : a_)
    if (x < 0) return false;
  return true;
}

bool ThetaMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

bool ThetaMatrix::has_zero_diagonal() const {
  for (int i = 0; i < n_; ++i)
    if ((*this)(i, i) != 0) return false;
  return true;
}

bool ThetaMatrix::has_negative_off_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) < 0) return true;
  return false;
}

ThetaMatrix ThetaMatrix::off_diagonal() const {
  ThetaMatrix A = *this;
  for (int i = 0; i < n_; ++i) A(i, i) = 0;
  return A;
}

std::vector<std::vector<int>> ThetaMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  return out;
}

ThetaMatrix& ThetaMatrix::operator+=(const ThetaMatrix& o) {
  if (o.n_ != n_) throw DimensionError("ThetaMatrix: size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ThetaMatrix& ThetaMatrix::operator-=(const ThetaMatrix& o) {
  if (o.n_ != n_) throw DimensionError("ThetaMatrix: size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

ThetaMatrix operator*(int s, ThetaMatrix a) {
  for (auto& x : a.a_) x *= s;
  return a;
}

std::string ThetaMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::pair<ThetaMatrix, ThetaMatrix> theta_pm_decompose(const ThetaMatrix& A) {
  if (!A.has_zero_diagonal()) throw DomainError("theta_pm_decompose: diagonal must be zero");
  ThetaMatrix up(A.n()), low(A.n());
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j) {
      if (i < j) up(i, j) = A(i, j);
      if (i > j) low(i, j) = A(i, j);
    }
  return {up, low};
}

int sigma(const IntVector& x) { return std::accumulate(x.begin(), x.end(), 0); }

int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: length mismatch");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference: length mismatch");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVector scaled(int s, const IntVector& a) {
  IntVector c = a;
  for (auto& x : c) x *= s;
  return c;
}

IntVector unit_vector(int n, int i) {
  IntVector e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

bool leq(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool is_natural(const IntVector& a) {
  for (int x : a)
    if (x < 0) return false;
  return true;
}

std::string to_string(const IntVector& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

namespace {

void compositions_rec(int n, int r, IntVector& cur, std::size_t pos, std::vector<IntVector>& out) {
  if (pos + 1 == static_cast<std::size_t>(n)) {
    cur[pos] = r;
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= r; ++k) {
    cur[pos] = k;
    compositions_rec(n, r - k, cur, pos + 1, out);
  }
}

}  // namespace

std::vector<IntVector> enumerate_compositions(int n, int r) {
  std::vector<IntVector> out;
  if (n < 1 || r < 0) return out;
  IntVector cur(static_cast<std::size_t>(n), 0);
  compositions_rec(n, r, cur, 0, out);
  return out;
}

std::vector<IntVector> enumerate_box(const IntVector& bound) {
  std::vector<IntVector> out;
  for (int b : bound)
    if (b < 0) return out;
  IntVector cur(bound.size(), 0);
  while (true) {
    out.push_back(cur);
    std::ptrdiff_t k = static_cast<std::ptrdiff_t>(cur.size()) - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == bound[static_cast<std::size_t>(k)]) {
      cur[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) return out;
    ++cur[static_cast<std::size_t>(k)];
  }
}

std::vector<IntVector> enumerate_cube(int n, int lo, int hi) {
  std::vector<IntVector> out;
  for (auto x : enumerate_box(IntVector(static_cast<std::size_t>(n), hi - lo))) {
    for (auto& xi : x) xi += lo;
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<ThetaMatrix> enumerate_theta(int n, int r) {
  std::vector<ThetaMatrix> out;
  for (const auto& flat : enumerate_compositions(n * n, r)) {
    ThetaMatrix A(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = flat[static_cast<std::size_t>(i * n + j)];
    out.push_back(std::move(A));
  }
  return out;
}

std::vector<ThetaMatrix> enumerate_theta_pm(int n, int s) {
  std::vector<ThetaMatrix> out;
  const int slots = n * (n - 1);
  if (slots == 0) {
    if (s == 0) out.emplace_back(n);
    return out;
  }
  for (const auto& flat : enumerate_compositions(slots, s)) {
    ThetaMatrix A(n);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) A(i, j) = flat[k++];
    out.push_back(std::move(A));
  }
  return out;
}

}  // namespace qschur
