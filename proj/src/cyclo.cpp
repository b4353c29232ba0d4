#include "qschur/cyclo.hpp"

#include "qschur/errors.hpp"

#include <sstream>

namespace qschur {

namespace {

using QPoly = std::vector<Rational>;  // lowest degree first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo a monic integer polynomial m.
QPoly reduce(QPoly a, const std::vector<Integer>& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const Rational lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t k = 0; k <= dm; ++k) a[shift + k] -= lead * Rational(m[k]);
    trim(a);
  }
  return a;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly p(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
  trim(p);
  return p;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

// Quotient and remainder of polynomial division over Q.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    trim(a);
  }
  trim(q);
  return {q, a};
}

void check_order(int l) {
  if (l < 1 || l % 2 == 0) throw DomainError("root of unity order must be odd and positive, got " + std::to_string(l));
}

constexpr int kPhiTableSize = 32;

// Phi_l for odd l below kPhiTableSize, built once and then read-only.
const std::vector<Integer>& phi(int l) {
  static const std::vector<std::vector<Integer>> table = [] {
    std::vector<std::vector<Integer>> t(kPhiTableSize);
    for (int k = 1; k < kPhiTableSize; k += 2) t[static_cast<std::size_t>(k)] = cyclotomic_polynomial(k);
    return t;
  }();
  if (l < kPhiTableSize) return table[static_cast<std::size_t>(l)];
  thread_local std::vector<Integer> scratch;
  scratch = cyclotomic_polynomial(l);
  return scratch;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int l) {
  if (l < 1) throw DomainError("cyclotomic_polynomial: l must be positive");
  // Phi_l = (v^l - 1) / prod_{d | l, d < l} Phi_d
  std::vector<Integer> num(static_cast<std::size_t>(l + 1), Integer(0));
  num[0] = -1;
  num[static_cast<std::size_t>(l)] = 1;
  for (int d = 1; d < l; ++d) {
    if (l % d != 0) continue;
    const std::vector<Integer> den = cyclotomic_polynomial(d);
    // exact division by a monic integer polynomial
    std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
    for (std::size_t s = q.size(); s-- > 0;) {
      const Integer f = num[s + den.size() - 1];
      q[s] = f;
      for (std::size_t k = 0; k < den.size(); ++k) num[s + k] -= f * den[k];
    }
    num = std::move(q);
  }
  return num;
}

CycloScalar::CycloScalar(int l) : l_(l) {
  check_order(l);
  coeffs_.assign(phi(l).size() - 1, Rational(0));
}

CycloScalar::CycloScalar(int l, std::vector<Rational> coeffs) : l_(l) {
  check_order(l);
  const auto& m = phi(l);
  coeffs_ = reduce(std::move(coeffs), m);
  coeffs_.resize(m.size() - 1, Rational(0));
}

CycloScalar CycloScalar::one(int l) { return CycloScalar(l, {Rational(1)}); }

bool CycloScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

void CycloScalar::check_same_order(const CycloScalar& o) const {
  if (o.l_ != l_) throw DimensionError("CycloScalar: mismatched root-of-unity orders");
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  check_same_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
  check_same_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar x = *this;
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  a.check_same_order(b);
  return CycloScalar(a.l_, mul(a.coeffs_, b.coeffs_));
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw DomainError("CycloScalar: inverse of zero");
  // Extended Euclid: s * x + t * Phi = 1.
  const auto& phi_int = phi(l_);
  QPoly r0(phi_int.begin(), phi_int.end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0, s1 = {Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw InternalError("CycloScalar::inverse: Phi_l not irreducible?");
  }
  const Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return CycloScalar(l_, s1);
}

std::string CycloScalar::to_string() const {
  std::ostringstream os;
  os << "(l=" << l_ << ")[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) os << (k ? ", " : "") << coeffs_[k];
  os << "]";
  return os.str();
}

CycloScalar eval_at_root(const LaurentPoly& p, int l) {
  check_order(l);
  // eps^l = 1, so exponents fold modulo l before reducing modulo Phi_l.
  QPoly folded(static_cast<std::size_t>(l), Rational(0));
  for (const auto& [e, c] : p.terms()) {
    const int k = ((e % l) + l) % l;
    folded[static_cast<std::size_t>(k)] += Rational(c);
  }
  return CycloScalar(l, std::move(folded));
}

}  // namespace qschur
