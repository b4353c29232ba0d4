#pragma once

// Symmetric groups, the type-A Hecke algebra H(r) and the endomorphism-level
// construction of S(n,r).  Everything here is deliberately naive: it is the
// definition-level reference that the structured multiplication formulas are
// checked against, not a performance path.

#include "qschur/laurent.hpp"
#include "qschur/schur_element.hpp"
#include "qschur/theta.hpp"

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace qschur {

/// Default cap on r for the Hecke oracle.
inline constexpr int kDefaultOracleCap = 6;

/// Permutation of {1..r} in one-line notation: images()[k] = w(k+1).
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless images is a permutation of 1..r.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int r);
  /// s_i = (i, i+1) for 1 <= i <= r-1 (1-based, as in the Coxeter presentation).
  static Permutation simple(int r, int i);

  int degree() const { return static_cast<int>(images_.size()); }
  /// w(k) for 1 <= k <= r.
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  /// Inversion count.
  int length() const;
  /// Indices i_1..i_m with w = s_{i_1} ... s_{i_m} reduced.
  std::vector<int> reduced_word() const;
  Permutation inverse() const;
  /// w * s_i: swaps the entries in positions i and i+1.
  Permutation times_simple(int i) const;

  /// (a * b)(k) = a(b(k)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All of S_r in lexicographic order of one-line notation.  Tables are built
/// once per r and shared read-only.
const std::vector<Permutation>& all_permutations(int r);

/// Element of H(r) in the basis {T_w}.
class HeckeElt {
 public:
  using Terms = std::map<Permutation, LaurentPoly>;

  explicit HeckeElt(int r = 0) : r_(r) {}
  static HeckeElt basis(const Permutation& w, LaurentPoly c = 1);

  int degree() const { return r_; }
  const Terms& terms() const { return terms_; }
  LaurentPoly coeff(const Permutation& w) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Permutation& w, const LaurentPoly& c);
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& c, HeckeElt a);

  /// h * T_{s_i}
  HeckeElt times_simple(int i) const;
  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);

  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

 private:
  int r_;
  Terms terms_;
};

/// (lambda, d, mu) with d the minimal-length element of S_lambda d S_mu.
struct CosetIndex {
  IntVector lam;
  Permutation d;
  IntVector mu;
  friend bool operator==(const CosetIndex&, const CosetIndex&) = default;
};

/// R_i^lambda: the i-th consecutive block of {1..r} of size lambda_i (i is 0-based).
/// Throws DomainError when i is out of range.
std::vector<int> row_blocks(const IntVector& lam, int i);

/// Elements of the Young subgroup S_lambda.
std::vector<Permutation> young_subgroup(const IntVector& lam);

/// The full double coset S_lambda d S_mu.
std::vector<Permutation> double_coset(const IntVector& lam, const Permutation& d, const IntVector& mu);

/// One minimal-length representative per (S_lambda, S_mu)-double coset, in
/// lexicographic order.  Found by orbit enumeration over S_r.
std::vector<Permutation> distinguished_reps(const IntVector& lam, const IntVector& mu);

/// A = (|R_k^lambda cap d R_l^mu|)_{k,l}.
ThetaMatrix coset_to_matrix(const CosetIndex& c);
/// Inverse of coset_to_matrix.  Throws DomainError unless A is natural.
CosetIndex matrix_to_coset(const ThetaMatrix& A);

/// x_lambda = sum of T_w over S_lambda.
HeckeElt x_lambda(const IntVector& lam);

/// d_A = sum over i >= k, j < l of a_{i,j} a_{k,l}.
int d_A(const ThetaMatrix& A);

/// The matrix of phi^d_{lambda,mu} and the scale v^{-d_A} with [A] = v^{-d_A} phi.
std::pair<ThetaMatrix, LaurentPoly> phi_to_normalized(const CosetIndex& c);

/// [A] * [B] in the normalized basis, computed by composing the endomorphisms
/// phi_A and phi_B of the permutation modules x_lambda H(r).
/// Throws ResourceError when r exceeds oracle_cap, DimensionError on mismatched
/// n or r, InternalError if a Hecke-module rewrite fails its consistency check.
SchurElement oracle_product(const ThetaMatrix& A, const ThetaMatrix& B, int oracle_cap = kDefaultOracleCap);

}  // namespace qschur
