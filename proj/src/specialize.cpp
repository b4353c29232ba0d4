#include "qschur/specialize.hpp"

#include "qschur/errors.hpp"
#include "qschur/parallel.hpp"

#include <sstream>

namespace qschur {

CycloSchurElement::CycloSchurElement(int n, int r, int l) : n_(n), r_(r), l_(l) {
  (void)CycloScalar(l);  // validates l
}

void CycloSchurElement::add_term(const ThetaMatrix& A, const CycloScalar& c) {
  if (A.n() != n_ || A.sum() != r_) throw DimensionError("CycloSchurElement: term of the wrong size or degree");
  if (c.order() != l_) throw DimensionError("CycloSchurElement: coefficient of a different order");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(A, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CycloSchurElement& CycloSchurElement::operator+=(const CycloSchurElement& o) {
  if (o.n_ != n_ || o.r_ != r_ || o.l_ != l_) throw DimensionError("CycloSchurElement: incompatible operands");
  for (const auto& [A, c] : o.terms_) add_term(A, c);
  return *this;
}

CycloSchurElement& CycloSchurElement::operator*=(const CycloScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [A, x] : terms_) x = x * c;
  return *this;
}

std::string CycloSchurElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [A, c] : terms_) {
    os << (first ? "" : " + ") << c.to_string() << A.to_string();
    first = false;
  }
  return os.str();
}

CycloTruncatedElement::CycloTruncatedElement(int n, int r_max, int l) : n_(n), l_(l) {
  for (int r = 0; r <= r_max; ++r) components_.emplace_back(n, r, l);
}

CycloTruncatedElement& CycloTruncatedElement::operator*=(const CycloScalar& c) {
  for (auto& x : components_) x *= c;
  return *this;
}

CycloSchurElement specialize(const SchurElement& x, int l) {
  CycloSchurElement out(x.n(), x.degree(), l);
  for (const auto& [A, c] : x.terms()) out.add_term(A, eval_at_root(c, l));
  return out;
}

CycloTruncatedElement specialize(const TruncatedElement& x, int l) {
  CycloTruncatedElement out(x.n(), x.r_max(), l);
  for (int r = 0; r <= x.r_max(); ++r) out.component(r) = specialize(x.component(r), l);
  return out;
}

CycloSchurElement multiply(const CycloSchurElement& x, const CycloSchurElement& y, const ProductOptions& opts) {
  if (x.n() != y.n() || x.degree() != y.degree() || x.order() != y.order())
    throw DimensionError("multiply: incompatible specialized operands");
  CycloSchurElement out(x.n(), x.degree(), x.order());
  for (const auto& [M, a] : x.terms())
    for (const auto& [N, b] : y.terms()) {
      if (co(M) != ro(N)) continue;
      const CycloScalar ab = a * b;
      const SchurElement part = basis_product(M, N, opts);
      for (const auto& [C, e] : part.terms()) out.add_term(C, ab * eval_at_root(e, x.order()));
    }
  return out;
}

CycloTruncatedElement multiply(const CycloTruncatedElement& x, const CycloTruncatedElement& y,
                               const ProductOptions& opts) {
  if (x.n() != y.n() || x.r_max() != y.r_max() || x.order() != y.order())
    throw DimensionError("multiply: incompatible specialized operands");
  auto parts = parallel_map<std::optional<CycloSchurElement>>(
      static_cast<std::size_t>(x.r_max() + 1), [&](std::size_t r) {
        return std::optional(multiply(x.component(static_cast<int>(r)), y.component(static_cast<int>(r)), opts));
      });
  CycloTruncatedElement out(x.n(), x.r_max(), x.order());
  for (int r = 0; r <= x.r_max(); ++r) out.component(r) = std::move(*parts[static_cast<std::size_t>(r)]);
  return out;
}

KlReport check_Kl_trivial(int i, int l, int n, int r_max) {
  if (i < 0 || i >= n) throw DomainError("check_Kl_trivial: index out of range");
  KlReport rep{i, l, n, r_max, true, -1};
  const IntVector zero(static_cast<std::size_t>(n), 0);
  const auto image = specialize(realize(SymbolicElement::single(ThetaMatrix(n), scaled(l, unit_vector(n, i)), zero),
                                        r_max),
                                l);
  const auto unit = specialize(TruncatedElement::unit(n, r_max), l);
  for (int r = 0; r <= r_max; ++r)
    if (!(image.component(r) == unit.component(r))) {
      rep.holds = false;
      rep.first_bad_degree = r;
      break;
    }
  return rep;
}

std::vector<BkIndex> bk_indices(int n, int bound) {
  std::vector<BkIndex> out;
  for (int s = 0; s <= bound; ++s)
    for (const auto& A : enumerate_theta_pm(n, s))
      for (int t = 0; t <= bound - s; ++t)
        for (const auto& lam : enumerate_compositions(n, t)) out.push_back({A, lam});
  return out;
}

std::vector<CycloTruncatedElement> bk_family(int n, int bound, int l, int r_max) {
  const IntVector zero(static_cast<std::size_t>(n), 0);
  const auto indices = bk_indices(n, bound);
  auto members = parallel_map<std::optional<CycloTruncatedElement>>(indices.size(), [&](std::size_t k) {
    const auto& idx = indices[k];
    const auto left = realize(SymbolicElement::single(idx.A, zero, zero), r_max);
    const auto right = realize(SymbolicElement::single(ThetaMatrix(n), zero - idx.lam, idx.lam), r_max);
    return std::optional(specialize(multiply(left, right), l));
  });
  std::vector<CycloTruncatedElement> out;
  for (auto& m : members) out.push_back(std::move(*m));
  return out;
}

CycloVerdict cyclo_independence(const std::vector<CycloTruncatedElement>& family, int l, int r_max) {
  CycloVerdict v;
  v.l = l;
  v.r_max = r_max;
  v.members = family.size();
  std::map<std::pair<int, ThetaMatrix>, std::size_t> rows;
  for (const auto& x : family) {
    if (x.order() != l || x.r_max() != r_max) throw DimensionError("cyclo_independence: mixed family");
    for (int r = 0; r <= r_max; ++r)
      for (const auto& [C, c] : x.component(r).terms()) rows.emplace(std::pair(r, C), 0);
  }
  std::size_t k = 0;
  for (auto& [key, row] : rows) row = k++;
  v.coordinates = rows.size();
  const CycloScalar zero(l);
  Matrix<CycloScalar> M(rows.size(), std::vector<CycloScalar>(family.size(), zero));
  for (std::size_t col = 0; col < family.size(); ++col)
    for (int r = 0; r <= r_max; ++r)
      for (const auto& [C, c] : family[col].component(r).terms()) M[rows.at({r, C})][col] = c;
  const auto e = echelon(std::move(M));
  v.rank = e.rank();
  v.kernel = kernel_vector(e, family.size(), zero, CycloScalar::one(l));
  return v;
}

CycloVerdict bk_independence(int n, int bound, int l, int r_max) {
  return cyclo_independence(bk_family(n, bound, l, r_max), l, r_max);
}

}  // namespace qschur
