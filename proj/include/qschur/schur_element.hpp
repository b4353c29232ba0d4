#pragma once

#include "qschur/laurent.hpp"
#include "qschur/theta.hpp"

#include <map>
#include <string>

namespace qschur {

/// Finite Z[v,v^-1]-combination of basis elements [A] of S(n,r).
///
/// Keys are kept in row-major lexicographic order and zero coefficients are
/// never stored, so equality is structural.
class SchurElement {
 public:
  using Terms = std::map<ThetaMatrix, LaurentPoly>;

  SchurElement() = default;
  SchurElement(int n, int r) : n_(n), r_(r) {}

  /// The single basis element c * [A].  Throws DomainError if A is not natural.
  static SchurElement basis(const ThetaMatrix& A, LaurentPoly c = 1);
  /// sum over mu in Lambda(n, r) of [diag(mu)], the identity of S(n,r).
  static SchurElement unit(int n, int r);

  int n() const { return n_; }
  int degree() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const ThetaMatrix& A) const;

  /// Adds c * [A].  Matrices with a negative entry denote zero and are dropped;
  /// a natural matrix of the wrong size or degree throws DimensionError.
  void add_term(const ThetaMatrix& A, const LaurentPoly& c);

  SchurElement& operator+=(const SchurElement& o);
  SchurElement& operator-=(const SchurElement& o);
  SchurElement& operator*=(const LaurentPoly& c);
  friend SchurElement operator+(SchurElement a, const SchurElement& b) { return a += b; }
  friend SchurElement operator-(SchurElement a, const SchurElement& b) { return a -= b; }
  friend SchurElement operator*(const LaurentPoly& c, SchurElement a) { return a *= c; }

  friend bool operator==(const SchurElement&, const SchurElement&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const SchurElement& o) const;

  int n_ = 0;
  int r_ = 0;
  Terms terms_;
};

}  // namespace qschur
