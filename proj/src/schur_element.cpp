#include "qschur/schur_element.hpp"

#include "qschur/errors.hpp"

#include <sstream>

namespace qschur {

SchurElement SchurElement::basis(const ThetaMatrix& A, LaurentPoly c) {
  if (!A.is_natural()) throw DomainError("SchurElement::basis: matrix must be natural");
  SchurElement x(A.n(), A.sum());
  x.add_term(A, c);
  return x;
}

SchurElement SchurElement::unit(int n, int r) {
  SchurElement x(n, r);
  for (const auto& mu : enumerate_compositions(n, r)) x.terms_.emplace(ThetaMatrix::diag(mu), LaurentPoly(1));
  return x;
}

LaurentPoly SchurElement::coeff(const ThetaMatrix& A) const {
  auto it = terms_.find(A);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void SchurElement::add_term(const ThetaMatrix& A, const LaurentPoly& c) {
  if (c.is_zero() || !A.is_natural()) return;
  if (A.n() != n_ || A.sum() != r_)
    throw DimensionError("SchurElement: term " + A.to_string() + " does not lie in S(" + std::to_string(n_) + "," +
                         std::to_string(r_) + ")");
  auto [it, inserted] = terms_.try_emplace(A, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SchurElement::check_compatible(const SchurElement& o) const {
  if (o.n_ != n_ || o.r_ != r_) throw DimensionError("SchurElement: operands live in different S(n,r)");
}

SchurElement& SchurElement::operator+=(const SchurElement& o) {
  check_compatible(o);
  for (const auto& [A, c] : o.terms_) add_term(A, c);
  return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& o) {
  check_compatible(o);
  for (const auto& [A, c] : o.terms_) add_term(A, -c);
  return *this;
}

SchurElement& SchurElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [A, x] : terms_) x *= c;
  return *this;
}

std::string SchurElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [A, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c << ")" << A.to_string();
    first = false;
  }
  return os.str();
}

}  // namespace qschur
