#pragma once

// Exact arithmetic in Q(eps) = Q[v]/(Phi_l(v)), eps a primitive l-th root of
// unity with l odd.

#include "qschur/laurent.hpp"

#include <string>
#include <vector>

namespace qschur {

/// Integer coefficients of the l-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(int l);

/// Element of Q[v]/(Phi_l), stored as its unique reduced representative.
class CycloScalar {
 public:
  /// Zero of Q(eps).  Throws DomainError unless l is odd and positive.
  explicit CycloScalar(int l);
  /// Reduces arbitrary rational coefficients (lowest degree first) modulo Phi_l.
  CycloScalar(int l, std::vector<Rational> coeffs);

  static CycloScalar one(int l);

  int order() const { return l_; }
  /// Coefficients of the reduced representative; length deg Phi_l.
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  CycloScalar operator-() const;
  /// Multiplicative inverse; throws DomainError on zero.
  CycloScalar inverse() const;

  friend bool operator==(const CycloScalar&, const CycloScalar&) = default;

  std::string to_string() const;

 private:
  void check_same_order(const CycloScalar& o) const;

  int l_;
  std::vector<Rational> coeffs_;
};

/// Image of p under v -> eps in Q[v]/(Phi_l).  Throws DomainError on even or
/// nonpositive l.  For l = 1 this is evaluation at v = 1.
CycloScalar eval_at_root(const LaurentPoly& p, int l);

}  // namespace qschur
