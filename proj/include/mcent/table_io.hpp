#pragma once

#include <string>

#include "mcent/coeff_engine.hpp"
#include "mcent/polynomials.hpp"

namespace mcent {

/// {"meta":{"m":M,"max_size":S,"format":1},"entries":[{"lambda":..,"delta":..,"rho":..,"k":"<decimal>"}]}
/// pretty-printed with two-space indent and a trailing newline. Entries are
/// written in sorted order, so equal tables serialize to identical bytes.
std::string table_to_json(const CoefficientTable& table);

/// Inverse of table_to_json. Throws std::invalid_argument on schema violations,
/// zero coefficients, or entries breaking |rho| <= |lambda| + |delta|.
CoefficientTable table_from_json(const std::string& text);

/// Header "lambda,delta,rho,k"; shape fields are double-quoted.
std::string table_to_csv(const CoefficientTable& table);

/// {"offset": r, "coeffs": {"0": "...", "1": "..."}}
std::string poly_to_json(const BinomialPoly& poly);
BinomialPoly poly_from_json(const std::string& text);

} // namespace mcent
