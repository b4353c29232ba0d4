#include "qschur/laurent.hpp"

#include "qschur/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qschur {

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::monomial(int e, Integer c) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = e;
    p.coeffs_.push_back(std::move(c));
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Integer>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_monomial(e, c);
  return p;
}

Integer LaurentPoly::coeff(int e) const {
  if (coeffs_.empty() || e < low_ || e > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::vector<std::pair<int, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

void LaurentPoly::add_monomial(int e, const Integer& c) {
  if (c == 0) return;
  if (coeffs_.empty()) {
    low_ = e;
    coeffs_.push_back(c);
    return;
  }
  if (e < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - e), Integer(0));
    low_ = e;
  } else if (e > high_degree()) {
    coeffs_.resize(static_cast<std::size_t>(e - low_ + 1));
  }
  coeffs_[static_cast<std::size_t>(e - low_)] += c;
  normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.coeffs_.empty()) return *this;
  if (coeffs_.empty()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  const auto off = static_cast<std::size_t>(o.low_ - low_);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[off + k] += o.coeffs_[k];
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.coeffs_.empty() || b.coeffs_.empty()) return p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  p.normalize();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.coeffs_.empty()) p.low_ += k;
  return p;
}

Rational LaurentPoly::evaluate(const Rational& v) const {
  if (coeffs_.empty()) return 0;
  // Horner in v from the top, then scale by v^low.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + Rational(*it);
  Rational scale = 1;
  if (low_ != 0) {
    if (v == 0) throw DomainError("evaluate: negative exponent at v = 0");
    const Rational base = low_ > 0 ? v : Rational(1) / v;
    for (int k = 0; k < std::abs(low_); ++k) scale *= base;
  }
  return acc * scale;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly vpow(int e) { return LaurentPoly::monomial(e, 1); }

LaurentPoly bar(const LaurentPoly& p) {
  std::vector<std::pair<int, Integer>> t = p.terms();
  for (auto& [e, c] : t) e = -e;
  return LaurentPoly::from_terms(t);
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw DomainError("divide_exact: division by zero");
  if (p.is_zero()) return LaurentPoly{};
  // Long division from the top degree; v is a unit so low-degree alignment is free.
  const int dlo = d.low_degree();
  const int dhi = d.high_degree();
  const Integer lead = d.coeff(dhi);
  LaurentPoly rem = p;
  LaurentPoly quo;
  while (!rem.is_zero()) {
    const int rhi = rem.high_degree();
    if (rhi - rem.low_degree() < dhi - dlo) return std::nullopt;
    const Integer c = rem.coeff(rhi);
    if (c % lead != 0) return std::nullopt;
    const LaurentPoly step = LaurentPoly::monomial(rhi - dhi, c / lead);
    quo += step;
    rem -= step * d;
  }
  return quo;
}

LaurentPoly balanced_bracket(int i) {
  if (i == 0) return {};
  if (i < 0) return -balanced_bracket(-i);
  LaurentPoly p;
  for (int k = 0; k < i; ++k) p.add_monomial(i - 1 - 2 * k, 1);
  return p;
}

LaurentPoly unbalanced_bracket(int i) { return balanced_bracket(i).shifted(i - 1); }

LaurentPoly balanced_factorial(int t) {
  if (t < 0) throw DomainError("balanced_factorial: negative argument");
  LaurentPoly p = 1;
  for (int k = 1; k <= t; ++k) p *= balanced_bracket(k);
  return p;
}

LaurentPoly unbalanced_factorial(int t) {
  if (t < 0) throw DomainError("unbalanced_factorial: negative argument");
  LaurentPoly p = 1;
  for (int k = 1; k <= t; ++k) p *= unbalanced_bracket(k);
  return p;
}

namespace {

// Coefficients (in q = v^2) of the Gaussian binomial [[N over t]] for
// 0 <= t <= N, i.e. the number of partitions of k inside a t x (N - t) box.
std::vector<Integer> gaussian_q_coefficients(int N, int t) {
  // row[s] holds [[m over s]] for the current m, via
  // [[m over s]] = [[m-1 over s-1]] + q^s [[m-1 over s]].
  std::vector<std::vector<Integer>> row(static_cast<std::size_t>(t + 1));
  row[0] = {1};
  for (int m = 1; m <= N; ++m) {
    for (int s = std::min(m, t); s >= 1; --s) {
      const auto& prev_same = row[static_cast<std::size_t>(s)];
      const auto& prev_less = row[static_cast<std::size_t>(s - 1)];
      std::vector<Integer> next(std::max(prev_less.size(), prev_same.empty() ? 0 : prev_same.size() + s),
                                Integer(0));
      for (std::size_t k = 0; k < prev_less.size(); ++k) next[k] += prev_less[k];
      for (std::size_t k = 0; k < prev_same.size(); ++k) next[k + static_cast<std::size_t>(s)] += prev_same[k];
      row[static_cast<std::size_t>(s)] = std::move(next);
    }
  }
  return row[static_cast<std::size_t>(t)];
}

LaurentPoly compute_balanced_binomial_nonneg(int N, int t) {
  if (t > N) return {};
  const std::vector<Integer> q = gaussian_q_coefficients(N, t);
  const int shift = -t * (N - t);
  std::vector<std::pair<int, Integer>> terms;
  terms.reserve(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) terms.emplace_back(shift + 2 * static_cast<int>(k), q[k]);
  return LaurentPoly::from_terms(terms);
}

constexpr int kTableN = 24;

// Read-only table of [N over t] for 0 <= t <= N <= kTableN, built once.
const std::vector<std::vector<LaurentPoly>>& binomial_table() {
  static const std::vector<std::vector<LaurentPoly>> table = [] {
    std::vector<std::vector<LaurentPoly>> tab(kTableN + 1);
    for (int N = 0; N <= kTableN; ++N)
      for (int t = 0; t <= N; ++t) tab[static_cast<std::size_t>(N)].push_back(compute_balanced_binomial_nonneg(N, t));
    return tab;
  }();
  return table;
}

}  // namespace

LaurentPoly balanced_binomial(int N, int t) {
  if (t < 0) throw DomainError("balanced_binomial: t must be natural");
  if (t == 0) return 1;
  if (N < 0) {
    // [N over t] = (-1)^t [t - N - 1 over t]
    LaurentPoly p = balanced_binomial(t - N - 1, t);
    return (t % 2 == 0) ? p : -p;
  }
  if (t > N) return {};
  if (N <= kTableN) return binomial_table()[static_cast<std::size_t>(N)][static_cast<std::size_t>(t)];
  return compute_balanced_binomial_nonneg(N, t);
}

LaurentPoly unbalanced_binomial(int N, int t) { return balanced_binomial(N, t).shifted(t * (N - t)); }

LaurentPoly vector_binomial(const IntVector& mu, const IntVector& lam) {
  if (mu.size() != lam.size()) throw DimensionError("vector_binomial: length mismatch");
  LaurentPoly p = 1;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (lam[i] < 0) throw DomainError("vector_binomial: lower entries must be natural");
    if (lam[i] == 0) continue;
    p *= balanced_binomial(mu[i], lam[i]);
    if (p.is_zero()) break;
  }
  return p;
}

LaurentPoly trinomial(const IntVector& total, const IntVector& a, const IntVector& b, const IntVector& c) {
  if (a.size() != total.size() || b.size() != total.size() || c.size() != total.size())
    throw DimensionError("trinomial: length mismatch");
  LaurentPoly p = 1;
  for (std::size_t i = 0; i < total.size(); ++i) {
    if (a[i] < 0 || b[i] < 0 || c[i] < 0 || a[i] + b[i] + c[i] != total[i])
      throw DomainError("trinomial: total must equal a + b + c with natural parts");
    // [a+b+c]! / ([a]! [b]! [c]!) = [a+b+c over a] [b+c over b]
    if (a[i] > 0) p *= balanced_binomial(total[i], a[i]);
    if (b[i] > 0 && c[i] > 0) p *= balanced_binomial(b[i] + c[i], b[i]);
  }
  return p;
}

LaurentPoly unbalanced_trinomial(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw DomainError("unbalanced_trinomial: parts must be natural");
  return unbalanced_binomial(a + b + c, a) * unbalanced_binomial(b + c, b);
}

}  // namespace qschur
