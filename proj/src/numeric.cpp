#include "mcent/numeric.hpp"

namespace mcent {

BigInt binomial(std::int64_t n, std::int64_t k)
{
  if (n < 0)
    throw std::invalid_argument("binomial: negative upper index");
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt factorial(std::int64_t n)
{
  if (n < 0)
    throw std::invalid_argument("factorial: negative argument");
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i)
    result *= i;
  return result;
}

BigInt parse_decimal(const std::string& text)
{
  if (text.empty())
    throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size())
    throw std::invalid_argument("bad integer literal: " + text);
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("bad integer literal: " + text);
  BigInt value(text.substr(start));
  return text[0] == '-' ? BigInt(-value) : value;
}

} // namespace mcent
