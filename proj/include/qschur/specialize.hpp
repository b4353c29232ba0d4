#pragma once

// Base change along v -> eps, eps a primitive l-th root of unity (l odd), with
// coefficients in Q(eps).

#include "qschur/blm.hpp"
#include "qschur/cyclo.hpp"
#include "qschur/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace qschur {

/// Element of S_k(n,r), k = Q(eps): a Q(eps)-combination of [A]_eps.
class CycloSchurElement {
 public:
  using Terms = std::map<ThetaMatrix, CycloScalar>;

  CycloSchurElement(int n, int r, int l);

  int n() const { return n_; }
  int degree() const { return r_; }
  int order() const { return l_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c [A]; throws DimensionError on a wrong size, degree or order.
  void add_term(const ThetaMatrix& A, const CycloScalar& c);

  CycloSchurElement& operator+=(const CycloSchurElement& o);
  CycloSchurElement& operator*=(const CycloScalar& c);
  friend bool operator==(const CycloSchurElement&, const CycloSchurElement&) = default;

  std::string to_string() const;

 private:
  int n_;
  int r_;
  int l_;
  Terms terms_;
};

/// (x_r)_{r <= r_max} over Q(eps).
class CycloTruncatedElement {
 public:
  CycloTruncatedElement(int n, int r_max, int l);

  int n() const { return n_; }
  int r_max() const { return static_cast<int>(components_.size()) - 1; }
  int order() const { return l_; }
  const CycloSchurElement& component(int r) const { return components_.at(static_cast<std::size_t>(r)); }
  CycloSchurElement& component(int r) { return components_.at(static_cast<std::size_t>(r)); }

  CycloTruncatedElement& operator*=(const CycloScalar& c);
  friend bool operator==(const CycloTruncatedElement&, const CycloTruncatedElement&) = default;

 private:
  int n_;
  int l_;
  std::vector<CycloSchurElement> components_;
};

CycloSchurElement specialize(const SchurElement& x, int l);
/// Coefficientwise eval_at_root.  Throws DomainError unless l is odd and positive.
CycloTruncatedElement specialize(const TruncatedElement& x, int l);

/// Product in S_k(n,r): integral structure constants of each pair of basis
/// elements, specialized and combined over Q(eps).
CycloSchurElement multiply(const CycloSchurElement& x, const CycloSchurElement& y, const ProductOptions& opts = {});
CycloTruncatedElement multiply(const CycloTruncatedElement& x, const CycloTruncatedElement& y,
                               const ProductOptions& opts = {});

struct KlReport {
  int i = 0;
  int l = 0;
  int n = 0;
  int r_max = 0;
  bool holds = false;
  int first_bad_degree = -1;
};

/// Checks that 0(l e_i, 0) specializes to the unit in every component r <= r_max.
KlReport check_Kl_trivial(int i, int l, int n, int r_max);

/// Index (A, lambda) of the member A(0)_eps 0(-lambda, lambda)_eps.
struct BkIndex {
  ThetaMatrix A;
  IntVector lam;
};

/// All (A, lambda) with sigma(A) + sigma(lambda) <= bound.
std::vector<BkIndex> bk_indices(int n, int bound);

/// The specialized products A(0) 0(-lambda, lambda) at truncation r_max.
std::vector<CycloTruncatedElement> bk_family(int n, int bound, int l, int r_max);

struct CycloVerdict {
  int l = 0;
  int r_max = 0;
  std::size_t members = 0;
  std::size_t coordinates = 0;
  std::size_t rank = 0;
  bool independent() const { return rank == members; }
  /// Kernel vector over Q(eps) when dependent.
  std::optional<std::vector<CycloScalar>> kernel;
};

/// Exact rank over Q(eps) of a specialized family.
CycloVerdict cyclo_independence(const std::vector<CycloTruncatedElement>& family, int l, int r_max);

/// cyclo_independence(bk_family(...)).
CycloVerdict bk_independence(int n, int bound, int l, int r_max);

}  // namespace qschur
