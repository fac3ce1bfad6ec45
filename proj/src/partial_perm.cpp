#include "mcent/partial_perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

namespace mcent {

// Permutation

Permutation::Permutation(std::vector<int> images)
: images_(std::move(images))
{
  std::vector<bool> hit(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || hit[v])
      throw std::invalid_argument("image array is not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::identity(int n)
{
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles)
{
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i];
      if (a < 1 || a > n || used[a])
        throw std::invalid_argument("cycles are not disjoint cycles over [n]");
      used[a] = true;
      images[a - 1] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const
{
  if (degree() != rhs.degree())
    throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = images_[static_cast<std::size_t>(rhs.images_[i] - 1)];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const
{
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1)
      return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const
{
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int a = 1; a <= degree(); ++a) {
    if (seen[a])
      continue;
    std::vector<int> c;
    for (int x = a; !seen[x]; x = (*this)(x)) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::string cycles_str(const std::vector<std::vector<int>>& cycles)
{
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

} // namespace

std::string Permutation::str() const
{
  return degree() == 0 ? std::string("()") : cycles_str(cycles());
}

std::ostream& operator<<(std::ostream& os, const Permutation& p)
{
  return os << p.str();
}

// PartialPermutation

PartialPermutation::PartialPermutation(int m, std::vector<int> domain, std::vector<int> images)
: m_(m)
{
  if (m < 0)
    throw std::invalid_argument("m must be non-negative");
  if (domain.size() != images.size())
    throw std::invalid_argument("domain and image lists differ in length");

  std::vector<std::size_t> order(domain.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return domain[i] < domain[j]; });
  domain_.reserve(domain.size());
  images_.reserve(domain.size());
  for (auto i : order) {
    domain_.push_back(domain[i]);
    images_.push_back(images[i]);
  }

  if (!domain_.empty() && domain_.front() < 1)
    throw std::invalid_argument("domain entries must be positive");
  if (std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end())
    throw std::invalid_argument("domain has repeated entries");
  for (int a = 1; a <= m; ++a)
    if (!contains(a))
      throw std::invalid_argument("domain does not contain marked point " + std::to_string(a));
  auto sorted_images = images_;
  std::sort(sorted_images.begin(), sorted_images.end());
  if (sorted_images != domain_)
    throw std::invalid_argument("map is not a bijection of the domain");
}

PartialPermutation PartialPermutation::identity(int m)
{
  std::vector<int> d(static_cast<std::size_t>(m));
  std::iota(d.begin(), d.end(), 1);
  return PartialPermutation(m, d, d);
}

PartialPermutation PartialPermutation::from_cycles(int m, std::vector<int> domain,
                                                   const std::vector<std::vector<int>>& cycles)
{
  std::sort(domain.begin(), domain.end());
  std::vector<int> images = domain;
  std::vector<bool> used(domain.size(), false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto it = std::lower_bound(domain.begin(), domain.end(), c[i]);
      if (it == domain.end() || *it != c[i])
        throw std::invalid_argument("cycle entry " + std::to_string(c[i]) + " not in domain");
      auto idx = static_cast<std::size_t>(it - domain.begin());
      if (used[idx])
        throw std::invalid_argument("cycles are not disjoint");
      used[idx] = true;
      images[idx] = c[(i + 1) % c.size()];
    }
  }
  return PartialPermutation(m, std::move(domain), std::move(images));
}

bool PartialPermutation::contains(int a) const noexcept
{
  return std::binary_search(domain_.begin(), domain_.end(), a);
}

int PartialPermutation::apply(int a) const noexcept
{
  auto it = std::lower_bound(domain_.begin(), domain_.end(), a);
  if (it == domain_.end() || *it != a)
    return a;
  return images_[static_cast<std::size_t>(it - domain_.begin())];
}

Permutation PartialPermutation::extend(int n) const
{
  if (max_point() > n)
    throw std::invalid_argument("domain is not contained in [" + std::to_string(n) + "]");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (std::size_t i = 0; i < domain_.size(); ++i)
    images[static_cast<std::size_t>(domain_[i] - 1)] = images_[i];
  return Permutation(std::move(images));
}

std::string PartialPermutation::str() const
{
  std::string out = "(d={";
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(domain_[i]);
  }
  out += "}, w=";
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(domain_.size(), false);
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (seen[i])
      continue;
    std::vector<int> c;
    for (int x = domain_[i];;) {
      auto idx = static_cast<std::size_t>(
          std::lower_bound(domain_.begin(), domain_.end(), x) - domain_.begin());
      if (seen[idx])
        break;
      seen[idx] = true;
      c.push_back(x);
      x = images_[idx];
    }
    cycles.push_back(std::move(c));
  }
  out += cycles.empty() ? std::string("()") : cycles_str(cycles);
  out += ')';
  return out;
}

std::size_t PartialPermutation::hash() const noexcept
{
  std::size_t h = static_cast<std::size_t>(m_) * 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    h ^= static_cast<std::size_t>(domain_[i]) + 0x9e3779b9u + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(images_[i]) * 1000003u + (h << 6) + (h >> 2);
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const PartialPermutation& p)
{
  return os << p.str();
}

// Operations

PartialPermutation restrict_to(const Permutation& v, std::vector<int> domain, int m)
{
  std::vector<int> images;
  images.reserve(domain.size());
  for (int a : domain) {
    if (a < 1 || a > v.degree())
      throw std::invalid_argument("restriction domain outside the permutation's degree");
    images.push_back(v(a));
  }
  return PartialPermutation(m, std::move(domain), std::move(images));
}

PartialPermutation product(const PartialPermutation& lhs, const PartialPermutation& rhs)
{
  if (lhs.marked() != rhs.marked())
    throw std::invalid_argument("product of partial permutations with different m");

  std::vector<int> domain;
  domain.reserve(lhs.domain().size() + rhs.domain().size());
  std::set_union(lhs.domain().begin(), lhs.domain().end(), rhs.domain().begin(),
                 rhs.domain().end(), std::back_inserter(domain));
  std::vector<int> images;
  images.reserve(domain.size());
  for (int a : domain)
    images.push_back(lhs.apply(rhs.apply(a)));
  return PartialPermutation(lhs.marked(), std::move(domain), std::move(images));
}

namespace {

MarkedCycleShape type_from_cycles(const std::vector<std::vector<int>>& raw, int m)
{
  std::vector<Cycle> cycles;
  cycles.reserve(raw.size());
  for (const auto& c : raw) {
    Cycle entry;
    entry.reserve(c.size());
    for (int a : c)
      entry.push_back(a <= m ? a : kStar);
    cycles.push_back(std::move(entry));
  }
  return MarkedCycleShape(m, std::move(cycles));
}

} // namespace

MarkedCycleShape marked_type(const PartialPermutation& p)
{
  const auto d = p.domain();
  const auto w = p.images();
  std::vector<std::vector<int>> raw;
  std::vector<bool> seen(d.size(), false);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (seen[i])
      continue;
    std::vector<int> c;
    std::size_t idx = i;
    while (!seen[idx]) {
      seen[idx] = true;
      c.push_back(d[idx]);
      idx = static_cast<std::size_t>(std::lower_bound(d.begin(), d.end(), w[idx]) - d.begin());
    }
    raw.push_back(std::move(c));
  }
  return type_from_cycles(raw, p.marked());
}

MarkedCycleShape marked_type(const Permutation& v, int m)
{
  if (m > v.degree())
    throw std::invalid_argument("m exceeds the permutation's degree");
  return type_from_cycles(v.cycles(), m);
}

PartialPermutation conjugate(const Permutation& sigma, const PartialPermutation& p)
{
  for (int a = 1; a <= p.marked(); ++a)
    if (a > sigma.degree() || sigma(a) != a)
      throw std::invalid_argument("conjugating permutation moves marked point " +
                                  std::to_string(a));
  if (p.max_point() > sigma.degree())
    throw std::invalid_argument("domain does not fit the conjugating permutation");

  std::vector<int> domain;
  std::vector<int> images;
  const auto d = p.domain();
  const auto w = p.images();
  for (std::size_t i = 0; i < d.size(); ++i) {
    domain.push_back(sigma(d[i]));
    images.push_back(sigma(w[i]));
  }
  return PartialPermutation(p.marked(), std::move(domain), std::move(images));
}

std::vector<int> supp_m(const Permutation& v, int m)
{
  if (m > v.degree())
    throw std::invalid_argument("m exceeds the permutation's degree");
  std::vector<int> out;
  for (int a = 1; a <= v.degree(); ++a)
    if (a <= m || v(a) != a)
      out.push_back(a);
  return out;
}

BigInt count_partial_perms(int m, int n)
{
  if (m < 0 || m > n)
    throw std::invalid_argument("count_partial_perms requires 0 <= m <= n");
  BigInt total = 0;
  for (int k = 0; k <= n - m; ++k)
    total += binomial(n - m, k) * factorial(m + k);
  return total;
}

std::vector<Permutation> stabilizer_generators(int n, int m)
{
  std::vector<Permutation> gens;
  for (int i = m + 1; i <= n - 1; ++i)
    gens.push_back(Permutation::from_cycles(n, {{i, i + 1}}));
  return gens;
}

std::vector<PartialPermutation> enumerate_partial_perms(int m, int n)
{
  if (m < 0 || m > n)
    throw std::invalid_argument("enumerate_partial_perms requires 0 <= m <= n");
  std::vector<PartialPermutation> out;
  const int free = n - m;
  for (std::uint32_t mask = 0; mask < (1u << free); ++mask) {
    std::vector<int> domain(static_cast<std::size_t>(m));
    std::iota(domain.begin(), domain.end(), 1);
    for (int i = 0; i < free; ++i)
      if (mask & (1u << i))
        domain.push_back(m + 1 + i);
    auto images = domain;
    do {
      out.emplace_back(m, domain, images);
    } while (std::next_permutation(images.begin(), images.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartialPermutation> stabilizer_orbit(const PartialPermutation& p, int n)
{
  const auto gens = stabilizer_generators(n, p.marked());
  std::set<PartialPermutation> orbit{p};
  std::vector<PartialPermutation> frontier{p};
  while (!frontier.empty()) {
    auto current = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      auto next = conjugate(g, current);
      if (orbit.insert(next).second)
        frontier.push_back(std::move(next));
    }
  }
  return {orbit.begin(), orbit.end()};
}

} // namespace mcent
