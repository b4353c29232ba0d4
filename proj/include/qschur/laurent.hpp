#pragma once

// Exact arithmetic in Z[v, v^-1] together with the quantum-integer
// combinatorics (brackets, binomials, multinomials) used throughout the
// library.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer vector of length n (weights, compositions, shifts).
using IntVector = std::vector<int>;

/// Integer-coefficient Laurent polynomial in v.
///
/// Stored densely from the lowest nonzero exponent upward.  The representation
/// is canonical: no leading or trailing zero coefficients, and the zero
/// polynomial has no coefficients at all, so structural equality is ring
/// equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Integer c);  // NOLINT: integers embed as constants
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT

  /// c * v^e
  static LaurentPoly monomial(int e, Integer c = 1);
  /// Builds from (exponent, coefficient) pairs; repeated exponents accumulate.
  static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest / highest exponent with a nonzero coefficient.  Undefined on zero.
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int e) const;
  /// Nonzero (exponent, coefficient) pairs sorted by exponent.
  std::vector<std::pair<int, Integer>> terms() const;
  std::size_t term_count() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;

  /// Adds c * v^e in place.
  void add_monomial(int e, const Integer& c);

  /// Value at an exact rational point (v must be nonzero if negative exponents occur).
  Rational evaluate(const Rational& v) const;

  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// v^e
LaurentPoly vpow(int e);

/// Ring involution v -> v^-1.
LaurentPoly bar(const LaurentPoly& p);

/// Exact quotient p / d in Z[v, v^-1], or nullopt when d does not divide p.
/// Throws DomainError on d == 0.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d);

/// [i] = (v^i - v^-i) / (v - v^-1)
LaurentPoly balanced_bracket(int i);
/// [[i]] = (v^{2i} - 1) / (v^2 - 1)
LaurentPoly unbalanced_bracket(int i);

/// [t]^! = [1][2]...[t]
LaurentPoly balanced_factorial(int t);
/// [[t]]^! = [[1]][[2]]...[[t]]
LaurentPoly unbalanced_factorial(int t);

/// [N over t] = [N][N-1]...[N-t+1] / [t]^!, defined for every integer N and t >= 0.
LaurentPoly balanced_binomial(int N, int t);
/// [[N over t]], the unbalanced analogue; equals v^{t(N-t)} [N over t].
LaurentPoly unbalanced_binomial(int N, int t);

/// Per-coordinate product of balanced binomials [mu_i over lam_i].
/// Throws DimensionError on length mismatch, DomainError on negative lam.
LaurentPoly vector_binomial(const IntVector& mu, const IntVector& lam);

/// prod_i [total_i]^! / ([a_i]^! [b_i]^! [c_i]^!).
/// Throws DomainError unless total = a + b + c entrywise with all entries natural.
LaurentPoly trinomial(const IntVector& total, const IntVector& a, const IntVector& b,
                      const IntVector& c);

/// Scalar version [[a+b+c]]^! / ([[a]]^! [[b]]^! [[c]]^!) of the unbalanced multinomial.
LaurentPoly unbalanced_trinomial(int a, int b, int c);

}  // namespace qschur
