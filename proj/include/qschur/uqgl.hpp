#pragma once

// Generator words of U(n), the realization map zeta into truncated products,
// the defining relations and the PBW-type monomials.

#include "qschur/blm.hpp"
#include "qschur/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qschur {

enum class GenKind { E, F, K, KBinom };

/// E_h^{(m)}, F_h^{(m)}, K_i^{sign} or [K_i;0 over t].  Indices are 0-based in
/// code (h in [0, n-2], i in [0, n-1]) and 1-based in text.
struct Generator {
  GenKind kind;
  int index;
  int power;  // m for E/F, +1 or -1 for K, t for KBinom
  friend bool operator==(const Generator&, const Generator&) = default;
};

using GeneratorWord = std::vector<Generator>;

Generator divided_E(int h, int m);
Generator divided_F(int h, int m);
Generator torus_K(int i, int sign);
Generator torus_binom(int i, int t);

/// Parses whitespace- or '*'-separated tokens: E1, E1^(2), F2^(3), K1, K1^-1, [K1;2].
/// The empty string is the empty word (the unit).  Throws ParseError on bad
/// syntax and DomainError on indices outside the rank n.
GeneratorWord parse_word(const std::string& text, int n);
std::string to_string(const GeneratorWord& w);

/// Throws DomainError unless g is a valid generator for rank n.
void check_generator(const Generator& g, int n);

/// The symbolic image of a single generator: (mE_{h,h+1})(0), (mE_{h+1,h})(0),
/// 0(+-e_i, 0) or 0(0, t e_i).
SymbolicElement generator_image(const Generator& g, int n);

/// zeta(word) computed as the left-to-right product of the realized generator
/// images in the truncated product.
TruncatedElement zeta(const GeneratorWord& word, int n, int r_max, const ProductOptions& opts = {});

/// zeta(word) accumulated right to left with the closed-form rules; exact in
/// V(n) with no truncation.
SymbolicElement zeta_symbolic(const GeneratorWord& word, int n);

/// Linear combination of words.
using WordCombination = std::vector<std::pair<LaurentPoly, GeneratorWord>>;

struct RelationInstance {
  std::string relation;  // "a" ... "g", or a consistency identity name
  std::string label;     // human-readable instance
  bool holds = false;
  std::string detail;
};

struct RelationReport {
  int n = 0;
  int r_max = 0;
  std::vector<RelationInstance> instances;
  bool ok() const;
};

/// Instantiates every defining relation (a)-(g) for all valid indices and
/// checks it in each component r <= r_max; relation (e) divides exactly by
/// v - v^-1.  Also checks the divided-power and torus-binomial definitions
/// against the plain generators.
RelationReport check_relations(int n, int r_max);

/// PBW index (A, delta, lambda) with A zero-diagonal and delta in {0,1}^n.
struct PBWIndex {
  ThetaMatrix A;
  IntVector delta;
  IntVector lam;
  friend bool operator==(const PBWIndex&, const PBWIndex&) = default;
};

/// E^{(A+)} prod_i K_i^{delta_i}[K_i;0 over lambda_i] F^{(A-)} as a word.
GeneratorWord pbw_word(const PBWIndex& idx);
TruncatedElement pbw_monomial(const PBWIndex& idx, int r_max, const ProductOptions& opts = {});

/// All PBW indices of rank n with sigma(A) + sigma(lambda) <= bound.
std::vector<PBWIndex> pbw_indices(int n, int bound);

/// Coordinates of a family in the basis {[C] : C in Theta(n,r), r <= r_max}:
/// one row per coordinate that is nonzero for some member, in canonical order.
Matrix<LaurentPoly> coordinate_matrix(const std::vector<TruncatedElement>& family);

struct IndependenceVerdict {
  int r_max = 0;
  std::size_t members = 0;
  std::size_t coordinates = 0;
  QvRank rank;
  bool independent() const { return rank.independent; }
};

/// Exact independence over Q(v) of the given truncated family.
IndependenceVerdict independence_of(const std::vector<TruncatedElement>& family, int r_max);

/// independence_of applied to the PBW monomials of the indices.
IndependenceVerdict independence_check(const std::vector<PBWIndex>& indices, int n, int r_max);

}  // namespace qschur
