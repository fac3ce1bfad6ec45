#include "mcent/class_enum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mcent {

// FormalSum

FormalSum::FormalSum(int m, int n)
: m_(m), n_(n)
{
  if (m < 0 || n < m)
    throw std::invalid_argument("formal sum requires 0 <= m <= n");
}

void FormalSum::add(const PartialPermutation& p, const BigInt& coeff)
{
  if (p.marked() != m_)
    throw std::invalid_argument("term has a different m");
  if (p.max_point() > n_)
    throw std::invalid_argument("term domain leaves [n]");
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

BigInt FormalSum::coefficient(const PartialPermutation& p) const
{
  auto it = terms_.find(p);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void FormalSum::check_compatible(const FormalSum& rhs) const
{
  if (m_ != rhs.m_ || n_ != rhs.n_)
    throw std::invalid_argument("formal sums live in different algebras");
}

FormalSum FormalSum::operator+(const FormalSum& rhs) const
{
  check_compatible(rhs);
  FormalSum out = *this;
  for (const auto& [p, c] : rhs.terms_)
    out.add(p, c);
  return out;
}

FormalSum FormalSum::operator*(const FormalSum& rhs) const
{
  check_compatible(rhs);
  FormalSum out(m_, n_);
  for (const auto& [p, a] : terms_)
    for (const auto& [q, b] : rhs.terms_)
      out.add(product(p, q), a * b);
  return out;
}

FormalSum FormalSum::scaled(const BigInt& factor) const
{
  FormalSum out(m_, n_);
  for (const auto& [p, c] : terms_)
    out.add(p, c * factor);
  return out;
}

// GroupAlgebraSum

GroupAlgebraSum::GroupAlgebraSum(int n)
: n_(n)
{
  if (n < 0)
    throw std::invalid_argument("negative degree");
}

void GroupAlgebraSum::add(const Permutation& p, const BigInt& coeff)
{
  if (p.degree() != n_)
    throw std::invalid_argument("term has the wrong degree");
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

BigInt GroupAlgebraSum::coefficient(const Permutation& p) const
{
  auto it = terms_.find(p);
  return it == terms_.end() ? BigInt(0) : it->second;
}

GroupAlgebraSum GroupAlgebraSum::operator+(const GroupAlgebraSum& rhs) const
{
  if (n_ != rhs.n_)
    throw std::invalid_argument("group algebra sums of different degree");
  GroupAlgebraSum out = *this;
  for (const auto& [p, c] : rhs.terms_)
    out.add(p, c);
  return out;
}

GroupAlgebraSum GroupAlgebraSum::operator*(const GroupAlgebraSum& rhs) const
{
  if (n_ != rhs.n_)
    throw std::invalid_argument("group algebra sums of different degree");
  GroupAlgebraSum out(n_);
  for (const auto& [p, a] : terms_)
    for (const auto& [q, b] : rhs.terms_)
      out.add(p * q, a * b);
  return out;
}

GroupAlgebraSum GroupAlgebraSum::scaled(const BigInt& factor) const
{
  GroupAlgebraSum out(n_);
  for (const auto& [p, c] : terms_)
    out.add(p, c * factor);
  return out;
}

// Enumeration

namespace {

struct TypeFiller
{
  const MarkedCycleShape& shape;
  const std::vector<int>& domain;
  std::vector<std::vector<int>>& out;

  std::vector<int> image;     // indexed by position in domain
  std::vector<int> star_fill; // values for the star slots of marked cycles
  int marked_slots = 0;
  std::vector<int> star_lengths; // lengths of all-star cycles, non-increasing

  std::size_t pos(int a) const
  {
    return static_cast<std::size_t>(std::lower_bound(domain.begin(), domain.end(), a) -
                                    domain.begin());
  }

  void set_cycle(const std::vector<int>& cycle)
  {
    for (std::size_t i = 0; i < cycle.size(); ++i)
      image[pos(cycle[i])] = cycle[(i + 1) % cycle.size()];
  }

  void run()
  {
    const int m = shape.marked();
    std::vector<int> pool;
    for (int a : domain)
      if (a > m)
        pool.push_back(a);
    for (const auto& c : shape.cycles()) {
      if (c.front() == kStar)
        star_lengths.push_back(static_cast<int>(c.size()));
      else
        marked_slots += static_cast<int>(std::count(c.begin(), c.end(), kStar));
    }
    image.assign(domain.size(), 0);
    std::vector<bool> used(pool.size(), false);
    fill_marked(pool, used);
  }

  // Ordered injective choice of values for the star slots inside marked cycles.
  void fill_marked(const std::vector<int>& pool, std::vector<bool>& used)
  {
    if (static_cast<int>(star_fill.size()) == marked_slots) {
      std::size_t next = 0;
      for (const auto& c : shape.cycles()) {
        if (c.front() == kStar)
          break;
        std::vector<int> concrete;
        for (int e : c)
          concrete.push_back(e == kStar ? star_fill[next++] : e);
        set_cycle(concrete);
      }
      std::vector<int> rest;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (!used[i])
          rest.push_back(pool[i]);
      std::vector<int> lengths = star_lengths;
      fill_stars(rest, lengths);
      return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i])
        continue;
      used[i] = true;
      star_fill.push_back(pool[i]);
      fill_marked(pool, used);
      star_fill.pop_back();
      used[i] = false;
    }
  }

  // The smallest remaining value opens the next all-star cycle; the cycle's
  // length is chosen among the distinct remaining lengths, then the other
  // members are chosen in order. Each permutation arises exactly once.
  void fill_stars(const std::vector<int>& rest, std::vector<int>& lengths)
  {
    if (rest.empty()) {
      out.push_back(image);
      return;
    }
    const int lead = rest.front();
    const std::vector<int> others(rest.begin() + 1, rest.end());
    for (std::size_t li = 0; li < lengths.size(); ++li) {
      if (li > 0 && lengths[li] == lengths[li - 1])
        continue;
      const int len = lengths[li];
      std::vector<int> remaining_lengths = lengths;
      remaining_lengths.erase(remaining_lengths.begin() + static_cast<std::ptrdiff_t>(li));
      std::vector<int> cycle{lead};
      std::vector<bool> used(others.size(), false);
      choose_members(others, used, cycle, len, remaining_lengths);
    }
  }

  void choose_members(const std::vector<int>& others, std::vector<bool>& used,
                      std::vector<int>& cycle, int len, std::vector<int>& remaining_lengths)
  {
    if (static_cast<int>(cycle.size()) == len) {
      set_cycle(cycle);
      std::vector<int> rest;
      for (std::size_t i = 0; i < others.size(); ++i)
        if (!used[i])
          rest.push_back(others[i]);
      fill_stars(rest, remaining_lengths);
      return;
    }
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (used[i])
        continue;
      used[i] = true;
      cycle.push_back(others[i]);
      choose_members(others, used, cycle, len, remaining_lengths);
      cycle.pop_back();
      used[i] = false;
    }
  }
};

void check_fits(const MarkedCycleShape& rho, int n)
{
  if (rho.size() > n)
    throw std::invalid_argument("shape " + rho.str() + " of size " + std::to_string(rho.size()) +
                                " does not fit in [" + std::to_string(n) + "]");
}

// Calls fn(domain) for each domain [m] u S with S a k-subset of {m+1..n}.
template <typename F>
void for_each_domain(int m, int n, int size, F&& fn)
{
  const int k = size - m;
  if (k < 0 || k > n - m)
    return;
  std::vector<int> domain(static_cast<std::size_t>(m));
  std::iota(domain.begin(), domain.end(), 1);
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), m + 1);
  for (;;) {
    auto d = domain;
    d.insert(d.end(), pick.begin(), pick.end());
    fn(d);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + 1 + i)
      --i;
    if (i < 0)
      break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

} // namespace

std::vector<std::vector<int>> bijections_of_type(const MarkedCycleShape& shape,
                                                 const std::vector<int>& domain)
{
  if (static_cast<int>(domain.size()) != shape.size())
    throw std::invalid_argument("domain size differs from shape size");
  std::vector<std::vector<int>> out;
  TypeFiller filler{shape, domain, out, {}, {}, 0, {}};
  filler.run();
  return out;
}

std::vector<PartialPermutation> enumerate_class(const MarkedCycleShape& rho, int n)
{
  check_fits(rho, n);
  std::vector<PartialPermutation> out;
  for_each_domain(rho.marked(), n, rho.size(), [&](const std::vector<int>& d) {
    for (auto& images : bijections_of_type(rho, d))
      out.emplace_back(rho.marked(), d, std::move(images));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> enumerate_full_class(const MarkedCycleShape& lambda, int n)
{
  if (lambda.size() != n)
    throw std::invalid_argument("full class needs a shape of size exactly n");
  std::vector<int> d(static_cast<std::size_t>(n));
  std::iota(d.begin(), d.end(), 1);
  std::vector<Permutation> out;
  for (auto& images : bijections_of_type(lambda, d))
    out.emplace_back(std::move(images));
  std::sort(out.begin(), out.end());
  return out;
}

BigInt class_size(const MarkedCycleShape& rho, int n, CountMethod method)
{
  check_fits(rho, n);
  if (method == CountMethod::enumerate)
    return enumerate_class(rho, n).size();
  const int fixed = rho.m1();
  const BigInt completed = enumerate_class(rho.complete(n), n).size();
  return binomial(n - rho.size() + fixed, fixed) * completed;
}

FormalSum class_sum(const MarkedCycleShape& rho, int n)
{
  FormalSum sum(rho.marked(), n);
  for (const auto& p : enumerate_class(rho, n))
    sum.add(p);
  return sum;
}

GroupAlgebraSum k_class_sum(const MarkedCycleShape& lambda, int n)
{
  GroupAlgebraSum sum(n);
  for (const auto& p : enumerate_full_class(lambda, n))
    sum.add(p);
  return sum;
}

GroupAlgebraSum psi(const FormalSum& x)
{
  GroupAlgebraSum out(x.ambient());
  for (const auto& [p, c] : x.terms())
    out.add(p.extend(x.ambient()), c);
  return out;
}

bool centralizer_check(const GroupAlgebraSum& z, int m)
{
  for (const auto& g : stabilizer_generators(z.degree(), m)) {
    GroupAlgebraSum left(z.degree());
    GroupAlgebraSum right(z.degree());
    for (const auto& [p, c] : z.terms()) {
      left.add(g * p, c);
      right.add(p * g, c);
    }
    if (!(left == right))
      return false;
  }
  return true;
}

} // namespace mcent
