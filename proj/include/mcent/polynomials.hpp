#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcent/numeric.hpp"

namespace mcent {

/// Polynomial in n with rational coefficients; coeffs[i] multiplies n^i.
/// The leading coefficient is nonzero (the zero polynomial has no coefficients).
class RationalMonomialPoly
{
public:
  RationalMonomialPoly() = default;
  explicit RationalMonomialPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Throws std::domain_error on the zero polynomial.
  int degree() const;

  Rational eval(const Rational& n) const;

  /// E.g. "1/2*n^2 - 5/2*n + 3"; "0" for the zero polynomial.
  std::string str() const;

  bool operator==(const RationalMonomialPoly&) const = default;

private:
  std::vector<Rational> coeffs_;
};

/// Integer combination of the shifted binomials C(n - r, k), k >= 0.
class BinomialPoly
{
public:
  using Coeffs = std::map<int, BigInt>;

  explicit BinomialPoly(int offset = 0, Coeffs coeffs = {});

  int offset() const noexcept { return offset_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of C(n - r, k).
  BigInt coefficient(int k) const;

  /// Exact value at n. Throws std::domain_error when n < offset.
  BigInt eval(std::int64_t n) const;

  /// Largest k with a nonzero coefficient. Throws std::domain_error on zero.
  int degree() const;

  RationalMonomialPoly to_monomial() const;

  /// "k0*C(n-r,0) + k1*C(n-r,1) + ..."; "0" for the zero polynomial.
  std::string str() const;

  /// Product form for single-term polynomials, e.g. "(n-2)(n-3)/2" or "n-5";
  /// falls back to the monomial form otherwise.
  std::string factored_str() const;

  bool operator==(const BinomialPoly&) const = default;

private:
  int offset_;
  Coeffs coeffs_;
};

} // namespace mcent
