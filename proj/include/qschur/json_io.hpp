#pragma once

// JSON forms of the library's values.  Coefficients that fit in 64 bits are
// written as numbers and larger ones as decimal strings; the readers accept
// both.  Every reader throws ParseError on malformed input.

#include "qschur/blm.hpp"
#include "qschur/specialize.hpp"

#include <json.hpp>

namespace qschur {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// [[e, c], ...] sorted by exponent.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const IntVector& x);
IntVector vector_from_json(const Json& j);

Json to_json(const ThetaMatrix& A);
ThetaMatrix matrix_from_json(const Json& j);

/// {"n", "r", "terms": [{"matrix", "coeff"}]}
Json to_json(const SchurElement& x);
SchurElement schur_from_json(const Json& j);

/// [{"A", "delta", "lambda", "coeff"}]; the rank of an empty list is n.
Json to_json(const SymbolicElement& x);
SymbolicElement symbolic_from_json(const Json& j, int n);

/// {"n", "r_max", "components": [SchurElement, ...]}
Json to_json(const TruncatedElement& x);
TruncatedElement truncated_from_json(const Json& j);

/// {"l", "coeffs": ["p/q", ...]}
Json to_json(const CycloScalar& x);
CycloScalar cyclo_from_json(const Json& j);

Json to_json(const CycloSchurElement& x);
Json to_json(const CycloTruncatedElement& x);

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace qschur
