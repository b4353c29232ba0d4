#include "qschur/blm.hpp"

#include "qschur/errors.hpp"
#include "qschur/parallel.hpp"

#include <sstream>

namespace qschur {

// ---------------------------------------------------------------------------
// SymbolicElement

SymbolicElement SymbolicElement::single(const ThetaMatrix& A, const IntVector& delta, const IntVector& lam,
                                        LaurentPoly c) {
  SymbolicElement x(A.n());
  x.add_term(BlmKey{A, delta, lam}, c);
  return x;
}

LaurentPoly SymbolicElement::coeff(const BlmKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void SymbolicElement::add_term(const BlmKey& k, const LaurentPoly& c) {
  if (k.A.n() != n_ || static_cast<int>(k.delta.size()) != n_ || static_cast<int>(k.lam.size()) != n_)
    throw DimensionError("SymbolicElement: key of the wrong size for n = " + std::to_string(n_));
  if (!k.A.has_zero_diagonal()) throw DomainError("SymbolicElement: matrix must have zero diagonal");
  if (!is_natural(k.lam)) throw DomainError("SymbolicElement: lambda must be natural");
  if (c.is_zero() || k.A.has_negative_off_diagonal()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymbolicElement& SymbolicElement::operator+=(const SymbolicElement& o) {
  if (o.n_ != n_) throw DimensionError("SymbolicElement: operands of different rank");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SymbolicElement& SymbolicElement::operator-=(const SymbolicElement& o) {
  if (o.n_ != n_) throw DimensionError("SymbolicElement: operands of different rank");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SymbolicElement& SymbolicElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

std::string SymbolicElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c << ")" << k.A.to_string() << "(" << qschur::to_string(k.delta) << ","
       << qschur::to_string(k.lam) << ")";
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// TruncatedElement

TruncatedElement::TruncatedElement(int n, int r_max) : n_(n) {
  if (r_max < 0) throw DomainError("TruncatedElement: r_max must be natural");
  for (int r = 0; r <= r_max; ++r) components_.emplace_back(n, r);
}

TruncatedElement TruncatedElement::unit(int n, int r_max) {
  TruncatedElement x(n, r_max);
  for (int r = 0; r <= r_max; ++r) x.component(r) = SchurElement::unit(n, r);
  return x;
}

bool TruncatedElement::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

void TruncatedElement::check_compatible(const TruncatedElement& o) const {
  if (o.n_ != n_ || o.components_.size() != components_.size())
    throw DimensionError("TruncatedElement: operands with different n or r_max");
}

TruncatedElement& TruncatedElement::operator+=(const TruncatedElement& o) {
  check_compatible(o);
  for (std::size_t r = 0; r < components_.size(); ++r) components_[r] += o.components_[r];
  return *this;
}

TruncatedElement& TruncatedElement::operator-=(const TruncatedElement& o) {
  check_compatible(o);
  for (std::size_t r = 0; r < components_.size(); ++r) components_[r] -= o.components_[r];
  return *this;
}

TruncatedElement& TruncatedElement::operator*=(const LaurentPoly& c) {
  for (auto& x : components_) x *= c;
  return *this;
}

std::optional<TruncatedElement> TruncatedElement::divided_by(const LaurentPoly& d) const {
  TruncatedElement out(n_, r_max());
  for (int r = 0; r <= r_max(); ++r) {
    for (const auto& [A, c] : component(r).terms()) {
      auto q = divide_exact(c, d);
      if (!q) return std::nullopt;
      out.component(r).add_term(A, *q);
    }
  }
  return out;
}

TruncatedElement multiply(const TruncatedElement& x, const TruncatedElement& y, const ProductOptions& opts) {
  if (x.n() != y.n() || x.r_max() != y.r_max())
    throw DimensionError("multiply: truncated elements with different n or r_max");
  auto parts = parallel_map<SchurElement>(static_cast<std::size_t>(x.r_max() + 1), [&](std::size_t r) {
    return general_product(x.component(static_cast<int>(r)), y.component(static_cast<int>(r)), opts);
  });
  TruncatedElement out(x.n(), x.r_max());
  for (int r = 0; r <= x.r_max(); ++r) out.component(r) = std::move(parts[static_cast<std::size_t>(r)]);
  return out;
}

TruncatedElement realize(const SymbolicElement& x, int r_max) {
  TruncatedElement out(x.n(), r_max);
  for (const auto& [k, c] : x.terms()) {
    const int lowest = k.A.sum() + sigma(k.lam);  // A(delta, lam, r) = 0 below this degree
    for (int r = lowest; r <= r_max; ++r) {
      SchurElement part = element_A(k.A, k.delta, k.lam, r);
      part *= c;
      out.component(r) += part;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multiplication rules

namespace {

void check_lengths(int n, std::initializer_list<const IntVector*> vs) {
  for (const IntVector* v : vs)
    if (static_cast<int>(v->size()) != n) throw DimensionError("vector length differs from n");
}

void check_symbol(const ThetaMatrix& A, const IntVector& lam) {
  if (!A.has_zero_diagonal()) throw DomainError("matrix must have zero diagonal");
  if (!is_natural(lam)) throw DomainError("lambda must be natural");
}

/// All j with lo <= j <= hi entrywise (lo natural).
std::vector<IntVector> enumerate_range(const IntVector& lo, const IntVector& hi) {
  std::vector<IntVector> out;
  for (auto off : enumerate_box(hi - lo)) out.push_back(off + lo);
  return out;
}

LaurentPoly scalar_trinomial(int a, int b, int c) { return trinomial({a + b + c}, {a}, {b}, {c}); }

}  // namespace

SymbolicElement formula1_product(const IntVector& gamma, const IntVector& mu, const ThetaMatrix& A,
                                 const IntVector& delta, const IntVector& lam) {
  const int n = A.n();
  check_lengths(n, {&gamma, &mu, &delta, &lam});
  check_symbol(A, lam);
  if (!is_natural(mu)) throw DomainError("formula1_product: mu must be natural");
  SymbolicElement out(n);
  if (A.has_negative_off_diagonal()) return out;
  const IntVector rA = ro(A);
  const IntVector zero(static_cast<std::size_t>(n), 0);
  for (const auto& nu : enumerate_box(mu)) {
    LaurentPoly a_nu;
    IntVector lo(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) lo[i] = std::max(0, nu[i] - lam[i]);
    for (const auto& j : enumerate_range(lo, nu)) {
      LaurentPoly c = vector_binomial(rA, j);
      if (c.is_zero()) continue;
      c *= trinomial(lam + mu - nu, nu - j, lam - nu + j, mu - nu);
      a_nu += c.shifted(dot(rA, gamma + mu - j) + dot(lam, mu - j));
    }
    out.add_term(BlmKey{A, gamma + delta - nu, lam + mu - nu}, a_nu);
  }
  return out;
}

SymbolicElement formula2_E(int m, int h, const ThetaMatrix& A, const IntVector& delta, const IntVector& lam) {
  const int n = A.n();
  check_lengths(n, {&delta, &lam});
  check_symbol(A, lam);
  if (h < 0 || h + 1 >= n) throw DomainError("formula2_E: h out of range");
  if (m < 0) throw DomainError("formula2_E: m must be natural");
  SymbolicElement out(n);
  if (A.has_negative_off_diagonal()) return out;
  const int h1 = h + 1;
  for (const auto& t : enumerate_compositions(n, m)) {
    ThetaMatrix T = A;
    for (int u = 0; u < n; ++u) {
      if (u != h) T(h, u) += t[u];
      if (u != h1) T(h1, u) -= t[u];
    }
    if (T.has_negative_off_diagonal()) continue;

    int g0 = -t[h] * delta[h] + t[h1] * delta[h1];
    LaurentPoly prod = 1;
    int below_h = 0;  // sum of t_u for u < h
    for (int u = 0; u < n; ++u) {
      for (int j = u; j < n; ++j)
        if (j != h) g0 += A(h, j) * t[u];
      for (int j = u + 1; j < n; ++j)
        if (j != h1) g0 -= A(h1, j) * t[u];
      for (int w = u + 1; w < n; ++w)
        if (w != h && w != h1) g0 += t[u] * t[w];
      if (u != h && t[u] > 0) prod *= bar(unbalanced_binomial(A(h, u) + t[u], t[u]));
      if (u < h) below_h += t[u];
    }
    const int th = t[h];
    const int th1 = t[h1];
    for (int j = 0; j <= lam[h]; ++j) {
      const LaurentPoly neg = balanced_binomial(-th, lam[h] - j);
      for (int k = 0; k <= lam[h1]; ++k) {
        if (lam[h1] - k > th1) continue;  // [t_{h+1} over lam_{h+1}-k] = 0
        const LaurentPoly pos = balanced_binomial(th1, lam[h1] - k);
        const LaurentPoly base = (prod * neg * pos).shifted(g0 + 2 * j * th - k * th1);
        for (int c = 0; c <= std::min(th, j); ++c) {
          IntVector d = delta;
          IntVector l = lam;
          d[h] += below_h + lam[h] - j - c;
          d[h1] += lam[h1] - k - (below_h + th);
          l[h] = th + j - c;
          l[h1] = k;
          out.add_term(BlmKey{T, d, l}, base * scalar_trinomial(c, th - c, j - c));
        }
      }
    }
  }
  return out;
}

SymbolicElement formula2_F(int m, int h, const ThetaMatrix& A, const IntVector& delta, const IntVector& lam) {
  const int n = A.n();
  check_lengths(n, {&delta, &lam});
  check_symbol(A, lam);
  if (h < 0 || h + 1 >= n) throw DomainError("formula2_F: h out of range");
  if (m < 0) throw DomainError("formula2_F: m must be natural");
  SymbolicElement out(n);
  if (A.has_negative_off_diagonal()) return out;
  const int h1 = h + 1;
  for (const auto& t : enumerate_compositions(n, m)) {
    ThetaMatrix T = A;
    for (int u = 0; u < n; ++u) {
      if (u != h) T(h, u) -= t[u];
      if (u != h1) T(h1, u) += t[u];
    }
    if (T.has_negative_off_diagonal()) continue;

    int g0 = t[h] * delta[h] - t[h1] * delta[h1];
    LaurentPoly prod = 1;
    int above_h1 = 0;  // sum of t_u for u > h+1
    for (int u = 0; u < n; ++u) {
      for (int j = 0; j <= u; ++j)
        if (j != h1) g0 += A(h1, j) * t[u];
      for (int j = 0; j < u; ++j)
        if (j != h) g0 -= A(h, j) * t[u];
      if (u != h && u != h1)
        for (int w = u + 1; w < n; ++w) g0 += t[u] * t[w];
      if (u != h1 && t[u] > 0) prod *= bar(unbalanced_binomial(A(h1, u) + t[u], t[u]));
      if (u > h1) above_h1 += t[u];
    }
    const int th = t[h];
    const int th1 = t[h1];
    for (int j = 0; j <= lam[h1]; ++j) {
      const LaurentPoly neg = balanced_binomial(-th1, lam[h1] - j);
      for (int k = 0; k <= lam[h]; ++k) {
        if (lam[h] - k > th) continue;  // [t_h over lam_h-k] = 0
        const LaurentPoly pos = balanced_binomial(th, lam[h] - k);
        const LaurentPoly base = (prod * neg * pos).shifted(g0 + 2 * j * th1 - k * th);
        for (int c = 0; c <= std::min(th1, j); ++c) {
          IntVector d = delta;
          IntVector l = lam;
          d[h1] += above_h1 + lam[h1] - j - c;
          d[h] += lam[h] - k - (above_h1 + th1);
          l[h1] = th1 + j - c;
          l[h] = k;
          out.add_term(BlmKey{T, d, l}, base * scalar_trinomial(c, th1 - c, j - c));
        }
      }
    }
  }
  return out;
}

namespace {

template <class Rule>
SymbolicElement left_apply(const SymbolicElement& x, Rule rule) {
  SymbolicElement out(x.n());
  for (const auto& [k, c] : x.terms()) {
    SymbolicElement part = rule(k);
    part *= c;
    out += part;
  }
  return out;
}

}  // namespace

SymbolicElement torus_times(const IntVector& gamma, const IntVector& mu, const SymbolicElement& x) {
  return left_apply(x, [&](const BlmKey& k) { return formula1_product(gamma, mu, k.A, k.delta, k.lam); });
}

SymbolicElement raise_times(int m, int h, const SymbolicElement& x) {
  return left_apply(x, [&](const BlmKey& k) { return formula2_E(m, h, k.A, k.delta, k.lam); });
}

SymbolicElement lower_times(int m, int h, const SymbolicElement& x) {
  return left_apply(x, [&](const BlmKey& k) { return formula2_F(m, h, k.A, k.delta, k.lam); });
}

// ---------------------------------------------------------------------------
// Basis conversions

SymbolicElement delta_reduce(const SymbolicElement& x) {
  SymbolicElement done(x.n());
  SymbolicElement work = x;
  while (!work.is_zero()) {
    // Always expand the largest pending key; rewriting only moves delta toward {0,1}.
    auto it = std::prev(work.terms().end());
    const BlmKey key = it->first;
    const LaurentPoly c = it->second;
    work.add_term(key, -c);

    int i = 0;
    while (i < x.n() && key.delta[i] >= 0 && key.delta[i] <= 1) ++i;
    if (i == x.n()) {
      done.add_term(key, c);
      continue;
    }
    const int li = key.lam[i];
    BlmKey first = key;
    BlmKey second = key;
    first.lam[i] += 1;
    LaurentPoly c1, c2;
    if (key.delta[i] >= 2) {
      first.delta[i] -= 1;
      second.delta[i] -= 2;
      c1 = vpow(2 * li + 1) - vpow(-1);
      c2 = vpow(2 * li);
    } else {
      first.delta[i] += 1;
      second.delta[i] += 2;
      c1 = vpow(-2 * li - 1) - vpow(1);
      c2 = vpow(-2 * li);
    }
    work.add_term(first, c * c1);
    work.add_term(second, c * c2);
  }
  return done;
}

SymbolicElement b1_expand(const IntVector& delta, const IntVector& lam, const ThetaMatrix& A) {
  const int n = A.n();
  check_lengths(n, {&delta, &lam});
  check_symbol(A, lam);
  SymbolicElement out(n);
  if (A.has_negative_off_diagonal()) return out;
  const IntVector rA = ro(A);
  for (const auto& j : enumerate_box(lam)) {
    const LaurentPoly c = vector_binomial(rA, j).shifted(dot(rA, delta + lam - j));
    out.add_term(BlmKey{A, delta - j, lam - j}, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Order, norm and the triangular relation

bool order_less(const ThetaMatrix& B, const ThetaMatrix& A) {
  if (A.n() != B.n()) throw DimensionError("order_less: matrices of different size");
  const int n = A.n();
  auto upper = [n](const ThetaMatrix& M, int i, int j) {
    int s = 0;
    for (int a = 0; a <= i; ++a)
      for (int b = j; b < n; ++b) s += M(a, b);
    return s;
  };
  auto lower = [n](const ThetaMatrix& M, int i, int j) {
    int s = 0;
    for (int a = 0; a <= i; ++a)
      for (int b = j; b < n; ++b) s += M(b, a);
    return s;
  };
  bool strict = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int bu = upper(B, i, j), au = upper(A, i, j);
      const int bl = lower(B, i, j), al = lower(A, i, j);
      if (bu > au || bl > al) return false;
      strict = strict || bu < au || bl < al;
    }
  return strict;
}

int norm(const ThetaMatrix& A) {
  int s = 0;
  for (int r = 0; r < A.n(); ++r)
    for (int c = 0; c < A.n(); ++c) {
      const int d = std::abs(c - r);
      s += d * (d + 1) / 2 * A(r, c);
    }
  return s;
}

std::vector<DividedPower> triangular_factors(const ThetaMatrix& A) {
  const int n = A.n();
  std::vector<DividedPower> out;
  for (int j = n - 1; j >= 1; --j)        // M_n ... M_2
    for (int i = j - 1; i >= 0; --i)      // (E_i ... E_{j-1})^{(a_ij)}, i from j-1 down
      for (int h = i; h < j; ++h)
        if (A(i, j) > 0) out.push_back({true, h, A(i, j)});
  for (int j = 1; j < n; ++j)              // M'_2 ... M'_n
    for (int i = 0; i < j; ++i)            // (F_{j-1} ... F_i)^{(a_ji)}
      for (int h = j - 1; h >= i; --h)
        if (A(j, i) > 0) out.push_back({false, h, A(j, i)});
  return out;
}

SymbolicElement ordered_product(const std::vector<DividedPower>& factors, int n) {
  const IntVector zero(static_cast<std::size_t>(n), 0);
  SymbolicElement x = SymbolicElement::single(ThetaMatrix(n), zero, zero);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    x = it->raising ? raise_times(it->m, it->h, x) : lower_times(it->m, it->h, x);
  return delta_reduce(x);
}

TriangularReport triangular_product(const ThetaMatrix& A, int r_max) {
  if (!A.has_zero_diagonal() || !A.is_natural()) throw DomainError("triangular_product: A must lie in Theta^pm");
  const int n = A.n();
  const IntVector zero(static_cast<std::size_t>(n), 0);
  TriangularReport rep;
  rep.A = A;
  const auto factors = triangular_factors(A);
  rep.product = ordered_product(factors, n);

  const BlmKey lead{A, zero, zero};
  rep.leading_coeff = rep.product.coeff(lead);
  rep.leading_ok = rep.leading_coeff == LaurentPoly(1);
  if (!rep.leading_ok) rep.violations.push_back("leading coefficient is " + rep.leading_coeff.to_string());

  rep.lower_terms_ok = true;
  const int normA = norm(A);
  for (const auto& [k, c] : rep.product.terms()) {
    if (k == lead) continue;
    if (!order_less(k.A, A) || norm(k.A) >= normA) {
      rep.lower_terms_ok = false;
      rep.violations.push_back("term " + k.A.to_string() + " is not below A");
    }
  }

  TruncatedElement direct = TruncatedElement::unit(n, r_max);
  for (const auto& f : factors) {
    ThetaMatrix M(n);
    if (f.raising) M(f.h, f.h + 1) = f.m;
    else M(f.h + 1, f.h) = f.m;
    direct = multiply(direct, realize(SymbolicElement::single(M, zero, zero), r_max));
  }
  rep.realized_ok = direct == realize(rep.product, r_max);
  if (!rep.realized_ok) rep.violations.push_back("symbolic product disagrees with the truncated product");
  return rep;
}

}  // namespace qschur
