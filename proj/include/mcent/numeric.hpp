#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcent {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses a signed decimal string. Throws std::invalid_argument on bad input.
BigInt parse_decimal(const std::string& text);

} // namespace mcent
