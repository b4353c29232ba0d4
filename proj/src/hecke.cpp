#include "qschur/hecke.hpp"

#include "qschur/errors.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>

namespace qschur {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k) + 1) throw DomainError("Permutation: images must be a permutation of 1..r");
}

Permutation Permutation::identity(int r) {
  std::vector<int> im(static_cast<std::size_t>(r));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::simple(int r, int i) {
  if (i < 1 || i >= r) throw DomainError("Permutation::simple: index out of range");
  return identity(r).times_simple(i);
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < images_.size(); ++a)
    for (std::size_t b = a + 1; b < images_.size(); ++b)
      if (images_[a] > images_[b]) ++inv;
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  // Bubble-sort w to the identity by right multiplications w s_{j1} ... s_{jm} = 1,
  // so w = s_{jm} ... s_{j1}.
  std::vector<int> cur = images_;
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (cur[p] > cur[p + 1]) {
        std::swap(cur[p], cur[p + 1]);
        swaps.push_back(static_cast<int>(p) + 1);
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::times_simple(int i) const {
  Permutation p = *this;
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DimensionError("Permutation product: degree mismatch");
  Permutation p;
  p.images_.resize(b.images_.size());
  for (std::size_t k = 0; k < b.images_.size(); ++k) p.images_[k] = a(b.images_[k]);
  return p;
}

const std::vector<Permutation>& all_permutations(int r) {
  static std::mutex mu;
  static std::map<int, std::vector<Permutation>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(r);
  if (it != tables.end()) return it->second;
  std::vector<Permutation> perms;
  std::vector<int> im(static_cast<std::size_t>(r));
  std::iota(im.begin(), im.end(), 1);
  do {
    perms.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return tables.emplace(r, std::move(perms)).first->second;
}

// ---------------------------------------------------------------------------

HeckeElt HeckeElt::basis(const Permutation& w, LaurentPoly c) {
  HeckeElt h(w.degree());
  h.add_term(w, c);
  return h;
}

LaurentPoly HeckeElt::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElt::add_term(const Permutation& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (w.degree() != r_) throw DimensionError("HeckeElt: permutation degree mismatch");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (o.r_ != r_) throw DimensionError("HeckeElt: degree mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  if (o.r_ != r_) throw DimensionError("HeckeElt: degree mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElt operator*(const LaurentPoly& c, HeckeElt a) {
  if (c.is_zero()) return HeckeElt(a.r_);
  for (auto& [w, x] : a.terms_) x *= c;
  return a;
}

HeckeElt HeckeElt::times_simple(int i) const {
  // T_w T_s = T_{ws} if l(ws) > l(w), else (q - 1) T_w + q T_{ws}, q = v^2.
  static const LaurentPoly q = vpow(2);
  static const LaurentPoly q_minus_one = vpow(2) - LaurentPoly(1);
  HeckeElt out(r_);
  for (const auto& [w, c] : terms_) {
    const Permutation ws = w.times_simple(i);
    if (w(i) < w(i + 1)) {
      out.add_term(ws, c);
    } else {
      out.add_term(w, q_minus_one * c);
      out.add_term(ws, q * c);
    }
  }
  return out;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
  if (a.r_ != b.r_) throw DimensionError("HeckeElt product: degree mismatch");
  HeckeElt out(a.r_);
  for (const auto& [y, c] : b.terms_) {
    HeckeElt t = a;
    for (int i : y.reduced_word()) t = t.times_simple(i);
    out += c * t;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_composition_pair(const IntVector& lam, const IntVector& mu) {
  if (!is_natural(lam) || !is_natural(mu)) throw DomainError("compositions must be natural");
  if (sigma(lam) != sigma(mu)) throw DomainError("compositions of different r");
}

// block index (0-based) of each element 1..r under lam
std::vector<int> block_of(const IntVector& lam) {
  std::vector<int> b;
  for (std::size_t k = 0; k < lam.size(); ++k)
    for (int c = 0; c < lam[k]; ++c) b.push_back(static_cast<int>(k));
  return b;
}

// Simple reflections s_i (1-based) lying in S_lam.
std::vector<int> young_generators(const IntVector& lam) {
  const auto b = block_of(lam);
  std::vector<int> gens;
  for (std::size_t p = 0; p + 1 < b.size(); ++p)
    if (b[p] == b[p + 1]) gens.push_back(static_cast<int>(p) + 1);
  return gens;
}

// Orbit of w under left multiplication by S_lam and right multiplication by S_mu.
std::vector<Permutation> orbit(const Permutation& w, const IntVector& lam, const IntVector& mu) {
  const int r = w.degree();
  const auto left = young_generators(lam);
  const auto right = young_generators(mu);
  std::set<Permutation> seen{w};
  std::deque<Permutation> todo{w};
  while (!todo.empty()) {
    Permutation x = todo.front();
    todo.pop_front();
    for (int i : left) {
      Permutation y = Permutation::simple(r, i) * x;
      if (seen.insert(y).second) todo.push_back(y);
    }
    for (int j : right) {
      Permutation y = x.times_simple(j);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

HeckeElt coset_sum(const std::vector<Permutation>& coset, int r) {
  HeckeElt h(r);
  for (const auto& w : coset) h.add_term(w, 1);
  return h;
}

// Minimal-length element of the right coset S_lam w: within each value block
// of lam, the block's values are placed in increasing order of position.
Permutation min_right_coset_rep(const Permutation& w, const IntVector& lam) {
  const auto b = block_of(lam);
  std::vector<int> im = w.images();
  std::vector<int> next_value(lam.size());
  int start = 1;
  for (std::size_t k = 0; k < lam.size(); ++k) {
    next_value[k] = start;
    start += lam[k];
  }
  for (auto& x : im) x = next_value[static_cast<std::size_t>(b[static_cast<std::size_t>(x - 1)])]++;
  return Permutation(std::move(im));
}

}  // namespace

std::vector<int> row_blocks(const IntVector& lam, int i) {
  if (i < 0 || i >= static_cast<int>(lam.size())) throw DomainError("row_blocks: index out of range");
  int start = 1;
  for (int t = 0; t < i; ++t) start += lam[static_cast<std::size_t>(t)];
  std::vector<int> block(static_cast<std::size_t>(lam[static_cast<std::size_t>(i)]));
  std::iota(block.begin(), block.end(), start);
  return block;
}

std::vector<Permutation> young_subgroup(const IntVector& lam) {
  if (!is_natural(lam)) throw DomainError("young_subgroup: composition must be natural");
  const int r = sigma(lam);
  return orbit(Permutation::identity(r), lam, IntVector(lam.size(), 0));
}

std::vector<Permutation> double_coset(const IntVector& lam, const Permutation& d, const IntVector& mu) {
  check_composition_pair(lam, mu);
  if (d.degree() != sigma(lam)) throw DimensionError("double_coset: permutation degree mismatch");
  return orbit(d, lam, mu);
}

std::vector<Permutation> distinguished_reps(const IntVector& lam, const IntVector& mu) {
  check_composition_pair(lam, mu);
  const int r = sigma(lam);
  std::set<Permutation> covered;
  std::vector<Permutation> reps;
  for (const auto& w : all_permutations(r)) {
    if (covered.count(w)) continue;
    const auto orb = orbit(w, lam, mu);
    covered.insert(orb.begin(), orb.end());
    reps.push_back(*std::min_element(orb.begin(), orb.end(), [](const Permutation& a, const Permutation& b) {
      return std::pair(a.length(), a) < std::pair(b.length(), b);
    }));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

ThetaMatrix coset_to_matrix(const CosetIndex& c) {
  check_composition_pair(c.lam, c.mu);
  if (c.lam.size() != c.mu.size()) throw DimensionError("coset_to_matrix: lam and mu differ in length");
  const int n = static_cast<int>(c.lam.size());
  const auto row_block = block_of(c.lam);
  const auto col_block = block_of(c.mu);
  ThetaMatrix A(n);
  // a_{k,l} = |R_k^lam cap d(R_l^mu)|: count positions p in R_l^mu with d(p) in R_k^lam.
  for (int p = 1; p <= c.d.degree(); ++p)
    ++A(row_block[static_cast<std::size_t>(c.d(p) - 1)], col_block[static_cast<std::size_t>(p - 1)]);
  return A;
}

CosetIndex matrix_to_coset(const ThetaMatrix& A) {
  if (!A.is_natural()) throw DomainError("matrix_to_coset: matrix must be natural");
  const int n = A.n();
  const IntVector lam = ro(A);
  const IntVector mu = co(A);
  // Walk the column blocks in order, filling each with the smallest unused values
  // of R_1^lam, then R_2^lam, ...; this d is increasing on every R_l^mu and d^-1
  // is increasing on every R_k^lam, hence minimal in its double coset.
  std::vector<int> next_value(static_cast<std::size_t>(n));
  int start = 1;
  for (int k = 0; k < n; ++k) {
    next_value[static_cast<std::size_t>(k)] = start;
    start += lam[static_cast<std::size_t>(k)];
  }
  std::vector<int> images;
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int c = 0; c < A(k, l); ++c) images.push_back(next_value[static_cast<std::size_t>(k)]++);
  return {lam, Permutation(std::move(images)), mu};
}

HeckeElt x_lambda(const IntVector& lam) { return coset_sum(young_subgroup(lam), sigma(lam)); }

int d_A(const ThetaMatrix& A) {
  const int n = A.n();
  int d = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k <= i; ++k)
        for (int l = j + 1; l < n; ++l) d += A(i, j) * A(k, l);
  return d;
}

std::pair<ThetaMatrix, LaurentPoly> phi_to_normalized(const CosetIndex& c) {
  ThetaMatrix A = coset_to_matrix(c);
  const int d = d_A(A);
  return {std::move(A), vpow(-d)};
}

SchurElement oracle_product(const ThetaMatrix& A, const ThetaMatrix& B, int oracle_cap) {
  if (A.n() != B.n()) throw DimensionError("oracle_product: matrices of different size");
  const int r = A.sum();
  if (B.sum() != r) throw DimensionError("oracle_product: matrices of different degree");
  if (r > oracle_cap)
    throw ResourceError("oracle_product: r = " + std::to_string(r) + " exceeds oracle cap " + std::to_string(oracle_cap));
  SchurElement out(A.n(), r);
  if (co(A) != ro(B)) return out;

  const CosetIndex ca = matrix_to_coset(A);
  const CosetIndex cb = matrix_to_coset(B);

  // phi_B(x_{co B}) = sum over the double coset of B, an element of x_{ro B} H.
  const HeckeElt y = coset_sum(double_coset(cb.lam, cb.d, cb.mu), r);

  // Rewrite y = x_{ro B} h with h = sum c_d T_d over minimal right coset reps d:
  // x_lam T_d = sum_{u in S_lam} T_{ud} contributes coefficient 1 on every element
  // of the coset, so every coset must appear with a constant coefficient.
  const std::size_t coset_size = young_subgroup(cb.lam).size();
  std::map<Permutation, std::pair<LaurentPoly, std::size_t>> cosets;
  for (const auto& [w, c] : y.terms()) {
    auto [it, inserted] = cosets.try_emplace(min_right_coset_rep(w, cb.lam), c, 0);
    if (it->second.first != c) throw InternalError("oracle_product: non-uniform coefficients on a right coset");
    ++it->second.second;
  }
  HeckeElt h(r);
  for (const auto& [d, entry] : cosets) {
    if (entry.second != coset_size) throw InternalError("oracle_product: incomplete right coset");
    h.add_term(d, entry.first);
  }

  // phi_A(x_{ro B} h) = phi_A(x_{co A}) h.
  const HeckeElt z = coset_sum(double_coset(ca.lam, ca.d, ca.mu), r) * h;

  // Read off z in the phi-basis of Hom(x_{co B} H, x_{ro A} H) and renormalize.
  HeckeElt check(r);
  const int shift = -d_A(A) - d_A(B);
  for (const auto& D : distinguished_reps(ca.lam, cb.mu)) {
    const LaurentPoly c = z.coeff(D);
    if (c.is_zero()) continue;
    check += c * coset_sum(double_coset(ca.lam, D, cb.mu), r);
    const ThetaMatrix C = coset_to_matrix({ca.lam, D, cb.mu});
    out.add_term(C, c.shifted(shift + d_A(C)));
  }
  if (check != z) throw InternalError("oracle_product: composite is not a combination of double-coset sums");
  return out;
}

}  // namespace qschur
