#include "qschur/json_io.hpp"

#include "qschur/errors.hpp"

#include <limits>

namespace qschur {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_from_json(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  const auto x = j.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw ParseError("integer out of range: " + j.dump());
  return static_cast<int>(x);
}

}  // namespace

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw ParseError("malformed integer string \"" + s + "\"");
    return Integer(s);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, to_json(c)}));
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("Laurent polynomial must be a list of [exponent, coefficient] pairs");
  std::vector<std::pair<int, Integer>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw ParseError("bad Laurent term " + t.dump());
    terms.emplace_back(int_from_json(t[0]), integer_from_json(t[1]));
  }
  return LaurentPoly::from_terms(terms);
}

Json to_json(const IntVector& x) { return Json(x); }

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of integers, got " + j.dump());
  IntVector out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

Json to_json(const ThetaMatrix& A) { return Json(A.rows()); }

ThetaMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty list of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    const auto r = vector_from_json(row);
    if (r.size() != j.size()) throw ParseError("matrix must be square: " + j.dump());
    rows.push_back(r);
  }
  return ThetaMatrix(rows);
}

Json to_json(const SchurElement& x) {
  Json terms = Json::array();
  for (const auto& [A, c] : x.terms()) terms.push_back({{"matrix", to_json(A)}, {"coeff", to_json(c)}});
  return {{"n", x.n()}, {"r", x.degree()}, {"terms", terms}};
}

SchurElement schur_from_json(const Json& j) {
  const int n = int_from_json(field(j, "n"));
  const int r = int_from_json(field(j, "r"));
  if (n < 1 || r < 0) throw ParseError("bad n or r in Schur element");
  SchurElement out(n, r);
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be a list");
  for (const auto& t : terms) {
    const auto A = matrix_from_json(field(t, "matrix"));
    if (!A.is_natural()) throw ParseError("basis matrix has a negative entry: " + t.dump());
    out.add_term(A, laurent_from_json(field(t, "coeff")));
  }
  return out;
}

Json to_json(const SymbolicElement& x) {
  Json out = Json::array();
  for (const auto& [k, c] : x.terms())
    out.push_back({{"A", to_json(k.A)}, {"delta", to_json(k.delta)}, {"lambda", to_json(k.lam)}, {"coeff", to_json(c)}});
  return out;
}

SymbolicElement symbolic_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("symbolic element must be a list of terms");
  if (!j.empty()) n = static_cast<int>(field(j[0], "A").size());
  SymbolicElement out(n);
  for (const auto& t : j) {
    const BlmKey k{matrix_from_json(field(t, "A")), vector_from_json(field(t, "delta")),
                   vector_from_json(field(t, "lambda"))};
    const auto c = t.contains("coeff") ? laurent_from_json(t.at("coeff")) : LaurentPoly(1);
    out.add_term(k, c);
  }
  return out;
}

Json to_json(const TruncatedElement& x) {
  Json comps = Json::array();
  for (const auto& c : x.components()) comps.push_back(to_json(c));
  return {{"n", x.n()}, {"r_max", x.r_max()}, {"components", comps}};
}

TruncatedElement truncated_from_json(const Json& j) {
  const int n = int_from_json(field(j, "n"));
  const int r_max = int_from_json(field(j, "r_max"));
  if (n < 1 || r_max < 0) throw ParseError("bad n or r_max in truncated element");
  const auto& comps = field(j, "components");
  if (!comps.is_array() || comps.size() != static_cast<std::size_t>(r_max + 1))
    throw ParseError("\"components\" must list r_max + 1 elements");
  TruncatedElement out(n, r_max);
  for (int r = 0; r <= r_max; ++r) {
    auto c = schur_from_json(comps[static_cast<std::size_t>(r)]);
    if (c.n() != n || c.degree() != r) throw DimensionError("component " + std::to_string(r) + " has the wrong n or r");
    out.component(r) = std::move(c);
  }
  return out;
}

Json to_json(const CycloScalar& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.str());
  return {{"l", x.order()}, {"coeffs", coeffs}};
}

CycloScalar cyclo_from_json(const Json& j) {
  const int l = int_from_json(field(j, "l"));
  std::vector<Rational> coeffs;
  for (const auto& c : field(j, "coeffs")) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(integer_from_json(c));
      continue;
    }
    if (!c.is_string()) throw ParseError("cyclotomic coefficient must be a rational string: " + c.dump());
    const auto& s = c.get_ref<const std::string&>();
    const auto slash = s.find('/');
    const Integer num = integer_from_json(Json(s.substr(0, slash)));
    const Integer den = slash == std::string::npos ? Integer(1) : integer_from_json(Json(s.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
    coeffs.emplace_back(num, den);
  }
  try {
    return CycloScalar(l, std::move(coeffs));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const CycloSchurElement& x) {
  Json terms = Json::array();
  for (const auto& [A, c] : x.terms()) terms.push_back({{"matrix", to_json(A)}, {"coeff", to_json(c)}});
  return {{"n", x.n()}, {"r", x.degree()}, {"l", x.order()}, {"terms", terms}};
}

Json to_json(const CycloTruncatedElement& x) {
  Json comps = Json::array();
  for (int r = 0; r <= x.r_max(); ++r) comps.push_back(to_json(x.component(r)));
  return {{"n", x.n()}, {"r_max", x.r_max()}, {"l", x.order()}, {"components", comps}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace qschur
