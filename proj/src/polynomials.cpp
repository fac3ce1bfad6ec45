#include "mcent/polynomials.hpp"

#include <stdexcept>

namespace mcent {

namespace {

std::string rational_str(const Rational& q)
{
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

// "n - c" style linear factor for n - shift.
std::string linear_str(std::int64_t shift)
{
  if (shift == 0)
    return "n";
  return shift > 0 ? "n-" + std::to_string(shift) : "n+" + std::to_string(-shift);
}

} // namespace

// RationalMonomialPoly

RationalMonomialPoly::RationalMonomialPoly(std::vector<Rational> coeffs)
: coeffs_(std::move(coeffs))
{
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

int RationalMonomialPoly::degree() const
{
  if (coeffs_.empty())
    throw std::domain_error("degree of the zero polynomial");
  return static_cast<int>(coeffs_.size()) - 1;
}

Rational RationalMonomialPoly::eval(const Rational& n) const
{
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * n + *it;
  return acc;
}

std::string RationalMonomialPoly::str() const
{
  if (coeffs_.empty())
    return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0)
      continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string power = i == 0 ? "" : (i == 1 ? "n" : "n^" + std::to_string(i));
    if (i == 0)
      out += rational_str(mag);
    else if (mag == 1)
      out += power;
    else
      out += rational_str(mag) + "*" + power;
  }
  return out;
}

// BinomialPoly

BinomialPoly::BinomialPoly(int offset, Coeffs coeffs)
: offset_(offset)
{
  if (offset < 0)
    throw std::invalid_argument("binomial basis offset must be non-negative");
  for (auto& [k, c] : coeffs) {
    if (k < 0)
      throw std::invalid_argument("binomial basis index must be non-negative");
    if (c != 0)
      coeffs_.emplace(k, std::move(c));
  }
}

BigInt BinomialPoly::coefficient(int k) const
{
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

BigInt BinomialPoly::eval(std::int64_t n) const
{
  if (n < offset_)
    throw std::domain_error("evaluation point " + std::to_string(n) + " below offset " +
                            std::to_string(offset_));
  BigInt total = 0;
  for (const auto& [k, c] : coeffs_)
    total += c * binomial(n - offset_, k);
  return total;
}

int BinomialPoly::degree() const
{
  if (coeffs_.empty())
    throw std::domain_error("degree of the zero polynomial");
  return coeffs_.rbegin()->first;
}

RationalMonomialPoly BinomialPoly::to_monomial() const
{
  std::vector<Rational> total;
  for (const auto& [k, c] : coeffs_) {
    // C(n - r, k) = prod_{i<k} (n - r - i) / k!
    std::vector<Rational> term{Rational(1)};
    for (int i = 0; i < k; ++i) {
      std::vector<Rational> next(term.size() + 1, Rational(0));
      const Rational shift = -(offset_ + i);
      for (std::size_t j = 0; j < term.size(); ++j) {
        next[j + 1] += term[j];
        next[j] += term[j] * shift;
      }
      term = std::move(next);
    }
    const Rational scale = Rational(c) / Rational(factorial(k));
    if (total.size() < term.size())
      total.resize(term.size(), Rational(0));
    for (std::size_t j = 0; j < term.size(); ++j)
      total[j] += term[j] * scale;
  }
  return RationalMonomialPoly(std::move(total));
}

std::string BinomialPoly::str() const
{
  if (coeffs_.empty())
    return "0";
  std::string out;
  const std::string arg = offset_ == 0 ? "n" : "n-" + std::to_string(offset_);
  for (const auto& [k, c] : coeffs_) {
    if (!out.empty())
      out += c < 0 ? " - " : " + ";
    else if (c < 0)
      out += "-";
    BigInt mag = c < 0 ? BigInt(-c) : c;
    out += mag.str() + "*C(" + arg + "," + std::to_string(k) + ")";
  }
  return out;
}

std::string BinomialPoly::factored_str() const
{
  if (coeffs_.size() != 1)
    return to_monomial().str();
  const auto& [k, c] = *coeffs_.begin();
  if (k == 0)
    return c.str();

  const BigInt den = factorial(k);
  BigInt g = boost::multiprecision::gcd(c < 0 ? BigInt(-c) : c, den);
  BigInt num = c / g;
  BigInt rest = den / g;

  std::string factors;
  if (k == 1 && num == 1 && rest == 1)
    return linear_str(offset_);
  for (int i = 0; i < k; ++i)
    factors += offset_ + i == 0 ? std::string("n") : "(" + linear_str(offset_ + i) + ")";

  std::string out;
  if (num == -1)
    out = "-";
  else if (num != 1)
    out = num.str() + "*";
  out += factors;
  if (rest != 1)
    out += "/" + rest.str();
  return out;
}

} // namespace mcent
