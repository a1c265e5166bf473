#pragma once

/// @file serialize.hpp
/// @brief JSON records for every value type. Rationals are strings "p/q" or "p".
///
///   piecewise polynomial  {"breakpoints": ["0","1/2"], "pieces": [["1","-2"]]}
///   Jacobi data           {"b": [...], "a": [...], "depth": K}
///                         or {"lambda": "...", "eta": "...", "depth": K}
///   stratified function   [{"composition": [l1,...], "terms": [{"coeff": "p/q", "factors": [pw, ...]}]}]
///   Fock vector           {"scalar": "p/q", "graded": [{"degree": n, "function": <stratified>}]}
///   Meixner report        {"meixner": bool, "lambda", "eta", "degrees": [{"degree", "status", "residual_norm"}]}
///
/// Decoding throws ParseError on any structural problem and DomainError when a
/// well-formed record violates a value invariant.

#include <map>
#include <string>

#include <json.hpp>

#include "mfock/fock.hpp"
#include "mfock/jacobi.hpp"
#include "mfock/meixner.hpp"
#include "mfock/piecewise.hpp"
#include "mfock/rational.hpp"
#include "mfock/stratified.hpp"

namespace mfock {

using Json = nlohmann::ordered_json;

Json encode(const Rational& r);
Json encode(const PiecewisePolynomial& f);
Json encode(const JacobiData& nu);
Json encode(const StratifiedFunction& f);
Json encode(const FockVector& v);
Json encode(const MeixnerReport& report);

Rational decode_rational(const Json& j);
PiecewisePolynomial decode_piecewise(const Json& j);
JacobiData decode_jacobi(const Json& j);
StratifiedFunction decode_stratified(const Json& j, int degree);
FockVector decode_fock(const Json& j);

/// Object of named functions, {"h": <pw>, ...}; names come back sorted.
std::map<std::string, PiecewisePolynomial> decode_function_table(const Json& j);

/// Parses JSON text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace mfock
