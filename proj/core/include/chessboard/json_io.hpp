#pragma once

#include <nlohmann/json.hpp>

#include "chessboard/cubic.hpp"
#include "chessboard/geometry.hpp"
#include "chessboard/graded.hpp"
#include "chessboard/grassmann.hpp"
#include "chessboard/scalar.hpp"

namespace chessboard {

// ExactScalar <-> {"c": ["p/q", ... 8 strings ...]}
void to_json(nlohmann::json& out, const ExactScalar& s);
void from_json(const nlohmann::json& in, ExactScalar& s);

// ApproxComplex <-> [re, im]
void to_json(nlohmann::json& out, const ApproxComplex& z);
void from_json(const nlohmann::json& in, ApproxComplex& z);

// Sparse cubic-matrix form: {"n":2, "entries":[{"i":1,"k":1,"m":2,"v":<scalar>}]},
// entries in ascending (i,k,m) order, zeros omitted.
void to_json(nlohmann::json& out, const CubicMatrix& a);
// (CubicMatrix has no default constructor, so parsing is a named function
// rather than an ADL from_json.)
CubicMatrix cubic_from_json(const nlohmann::json& in);

/// Table as a JSON array of rows {"lhs","mid","rhs","result":[entry...]}.
nlohmann::json table_to_json(const TernaryTable& table);

/// Table as CSV with columns lhs,mid,rhs,result; the result field is the
/// always-quoted sparse string "i,k,m:v;..." (empty when the product is 0).
std::string table_to_csv(const TernaryTable& table);

// GradedMatrix <-> {"grade":1,"alpha":…,"beta":…,"gamma":…}; the three keys
// hold the pattern entries in row order for every grade.
void to_json(nlohmann::json& out, const GradedMatrix& g);
GradedMatrix graded_from_json(const nlohmann::json& in);

// GrassmannElement <-> {"n":2,"conjugates":true,"terms":[{"word":[1,-2],"coeff":…}]};
// terms appear in the element's own (length-free lexicographic) map order.
void to_json(nlohmann::json& out, const GrassmannElement& x);
GrassmannElement grassmann_from_json(const nlohmann::json& in);

// ConnectionJet <-> {"n":2,"gamma":…,"dgamma":…,"d2gamma":…} as nested
// arrays indexed gamma[l][i][k], dgamma[m][l][i][k], d2gamma[a][b][l][i][k],
// every index 0-based over a 1..n range.  d2gamma is emitted in full; the
// reader rejects data that is not symmetric in (a, b).
void to_json(nlohmann::json& out, const ConnectionJet& jet);
ConnectionJet jet_from_json(const nlohmann::json& in);

/// Parses "p" or "p/q" (used by the scalar JSON codec and the CLI).
Rational parse_rational(const std::string& text);

/// Canonical text of a rational, matching parse_rational.
std::string rational_str(const Rational& r);

}  // namespace chessboard
