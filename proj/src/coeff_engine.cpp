#include "mcent/coeff_engine.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "mcent/parallel.hpp"

namespace mcent {

namespace {

void require_same_m(const MarkedCycleShape& a, const MarkedCycleShape& b)
{
  if (a.marked() != b.marked())
    throw std::invalid_argument("shapes " + a.str() + " and " + b.str() + " have different m");
}

void require_proper(const MarkedCycleShape& s)
{
  if (!s.is_proper())
    throw std::invalid_argument("shape " + s.str() +
                                " is not proper; structure polynomials need shapes without (*)"
                                " cycles");
}

int floor_half(int v)
{
  return v >= 0 ? v / 2 : -((-v + 1) / 2);
}

// Calls fn(subset) for each k-subset of `items` (sorted input, sorted output).
template <typename F>
void for_each_subset(const std::vector<int>& items, int k, F&& fn)
{
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n)
    return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> subset(static_cast<std::size_t>(k));
  for (;;) {
    for (int i = 0; i < k; ++i)
      subset[static_cast<std::size_t>(i)] = items[static_cast<std::size_t>(idx[i])];
    fn(subset);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
      --i;
    if (i < 0)
      return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

} // namespace

// ClassExpansion

ClassExpansion::ClassExpansion(int m, int n)
: m_(m), n_(n)
{
}

void ClassExpansion::add(const MarkedCycleShape& shape, const BigInt& coeff)
{
  if (shape.marked() != m_)
    throw std::invalid_argument("expansion term has a different m");
  if (shape.size() > n_)
    throw std::invalid_argument("expansion term " + shape.str() + " does not fit in [" +
                                std::to_string(n_) + "]");
  if (coeff == 0)
    return;
  auto [it, inserted] = coeffs_.try_emplace(shape, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      coeffs_.erase(it);
  }
}

BigInt ClassExpansion::coefficient(const MarkedCycleShape& shape) const
{
  auto it = coeffs_.find(shape);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

ClassExpansion ClassExpansion::truncated(int size) const
{
  ClassExpansion out(m_, std::min(n_, size));
  for (const auto& [s, c] : coeffs_)
    if (s.size() <= size)
      out.add(s, c);
  return out;
}

std::string ClassExpansion::str(const std::string& basis) const
{
  if (coeffs_.empty())
    return "0";
  std::string out;
  for (const auto& [s, c] : coeffs_) {
    if (!out.empty())
      out += c < 0 ? " - " : " + ";
    else if (c < 0)
      out += "-";
    BigInt mag = c < 0 ? BigInt(-c) : c;
    out += mag.str() + "*" + basis + "[" + s.str() + "]";
  }
  return out;
}

// Class sizes

BigInt cached_class_size(const MarkedCycleShape& rho, int n)
{
  static std::mutex mutex;
  static std::map<std::pair<MarkedCycleShape, int>, BigInt> cache;
  auto key = std::make_pair(rho, n);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end())
      return it->second;
  }
  BigInt size = class_size(rho, n, CountMethod::enumerate);
  std::lock_guard lock(mutex);
  cache.emplace(std::move(key), size);
  return size;
}

// Products

ClassExpansion multiply_invariant(const MarkedCycleShape& lambda, const MarkedCycleShape& delta,
                                  int n)
{
  require_same_m(lambda, delta);
  const auto left = enumerate_class(lambda, n);
  const auto right = enumerate_class(delta, n);

  std::unordered_map<PartialPermutation, std::int64_t, PartialPermutationHash> counts;
  for (const auto& a : left) {
    for (const auto& b : right) {
      auto p = product(a, b);
      if (p.size() > a.size() + b.size())
        throw std::logic_error("deg1 filtration violated by " + a.str() + " * " + b.str());
      ++counts[std::move(p)];
    }
  }

  struct Bucket
  {
    std::int64_t coeff = 0;
    std::int64_t members = 0;
  };
  std::map<MarkedCycleShape, Bucket> buckets;
  for (const auto& [p, c] : counts) {
    auto& bucket = buckets[marked_type(p)];
    if (bucket.members == 0)
      bucket.coeff = c;
    else if (bucket.coeff != c)
      throw std::logic_error("product of class sums is not invariant");
    ++bucket.members;
  }

  ClassExpansion out(lambda.marked(), n);
  for (const auto& [shape, bucket] : buckets) {
    if (BigInt(bucket.members) != cached_class_size(shape, n))
      throw std::logic_error("product of class sums misses part of class " + shape.str());
    out.add(shape, bucket.coeff);
  }
  return out;
}

PartialPermutation canonical_representative(const MarkedCycleShape& rho)
{
  const int m = rho.marked();
  int next_star = m + 1;
  std::vector<std::vector<int>> cycles;
  for (const auto& c : rho.cycles()) {
    std::vector<int> concrete;
    for (int e : c)
      concrete.push_back(e == kStar ? next_star++ : e);
    cycles.push_back(std::move(concrete));
  }
  std::vector<int> domain(static_cast<std::size_t>(rho.size()));
  std::iota(domain.begin(), domain.end(), 1);
  return PartialPermutation::from_cycles(m, std::move(domain), cycles);
}

BigInt universal_coeff(const MarkedCycleShape& lambda, const MarkedCycleShape& delta,
                       const MarkedCycleShape& rho)
{
  require_same_m(lambda, delta);
  require_same_m(lambda, rho);
  const int m = rho.marked();
  const int r = rho.size();
  if (r > lambda.size() + delta.size() || r < std::max(lambda.size(), delta.size()))
    return 0;

  const Permutation target = canonical_representative(rho).extend(r);
  std::vector<int> unmarked;
  for (int a = m + 1; a <= r; ++a)
    unmarked.push_back(a);

  std::int64_t count = 0;
  for_each_subset(unmarked, lambda.size() - m, [&](const std::vector<int>& extra) {
    std::vector<int> d1(static_cast<std::size_t>(m));
    std::iota(d1.begin(), d1.end(), 1);
    d1.insert(d1.end(), extra.begin(), extra.end());

    for (const auto& images : bijections_of_type(lambda, d1)) {
      const Permutation first = PartialPermutation(m, d1, images).extend(r);
      const Permutation v = first.inverse() * target;

      // d2 must hold supp^m(v) and everything of d outside d1.
      std::vector<bool> required(static_cast<std::size_t>(r) + 1, false);
      for (int a : supp_m(v, m))
        required[a] = true;
      std::size_t d1_pos = 0;
      for (int a = 1; a <= r; ++a) {
        while (d1_pos < d1.size() && d1[d1_pos] < a)
          ++d1_pos;
        if (d1_pos == d1.size() || d1[d1_pos] != a)
          required[a] = true;
      }
      std::vector<int> base;
      std::vector<int> optional;
      for (int a = 1; a <= r; ++a)
        (required[a] ? base : optional).push_back(a);
      const int free = delta.size() - static_cast<int>(base.size());
      if (free < 0)
        continue;

      for_each_subset(optional, free, [&](const std::vector<int>& pick) {
        std::vector<int> d2 = base;
        d2.insert(d2.end(), pick.begin(), pick.end());
        std::sort(d2.begin(), d2.end());
        if (marked_type(restrict_to(v, std::move(d2), m)) == delta)
          ++count;
      });
    }
  });
  return count;
}

ClassExpansion universal_expansion(const MarkedCycleShape& lambda,
                                   const MarkedCycleShape& delta)
{
  require_same_m(lambda, delta);
  const int big_n = lambda.size() + delta.size();
  const PartialPermutation fixed = canonical_representative(lambda);

  std::map<MarkedCycleShape, std::int64_t> hits;
  for (const auto& b : enumerate_class(delta, big_n))
    ++hits[marked_type(product(fixed, b))];

  const BigInt left_size = cached_class_size(lambda, big_n);
  ClassExpansion out(lambda.marked(), big_n);
  for (const auto& [shape, count] : hits) {
    const BigInt pairs = left_size * count;
    const BigInt size = cached_class_size(shape, big_n);
    if (pairs % size != 0)
      throw std::logic_error("pair count not divisible by class size for " + shape.str());
    out.add(shape, pairs / size);
  }
  return out;
}

ClassExpansion project_to_centralizer(const ClassExpansion& expansion, int n)
{
  ClassExpansion out(expansion.marked(), n);
  for (const auto& [tau, k] : expansion.coeffs()) {
    if (tau.size() > n)
      continue;
    const int fixed = tau.m1();
    out.add(tau.complete(n), k * binomial(n - tau.size() + fixed, fixed));
  }
  return out;
}

// Tables

BigInt CoefficientTable::lookup(const MarkedCycleShape& lambda, const MarkedCycleShape& delta,
                                const MarkedCycleShape& rho) const
{
  for (const auto& e : entries)
    if (e.lambda == lambda && e.delta == delta && e.rho == rho)
      return e.k;
  return 0;
}

void sort_entries(std::vector<TableEntry>& entries)
{
  std::vector<std::pair<std::tuple<std::string, std::string, std::string>, std::size_t>> keys;
  keys.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    keys.push_back({{entries[i].lambda.str(), entries[i].delta.str(), entries[i].rho.str()}, i});
  std::sort(keys.begin(), keys.end());
  std::vector<TableEntry> sorted;
  sorted.reserve(entries.size());
  for (const auto& [key, i] : keys)
    sorted.push_back(std::move(entries[i]));
  entries = std::move(sorted);
}

CoefficientTable build_table(int m, int max_size, unsigned threads)
{
  const auto shapes = enumerate_shapes(m, max_size, false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = 0; j < shapes.size(); ++j)
      pairs.emplace_back(i, j);

  std::vector<std::vector<TableEntry>> per_pair(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t idx) {
    const auto& lambda = shapes[pairs[idx].first];
    const auto& delta = shapes[pairs[idx].second];
    const auto expansion = universal_expansion(lambda, delta);
    for (const auto& [rho, k] : expansion.coeffs()) {
      if (rho.size() > lambda.size() + delta.size())
        throw std::logic_error("support bound violated");
      per_pair[idx].push_back({lambda, delta, rho, k});
    }
  });

  CoefficientTable table{m, max_size, {}};
  for (auto& chunk : per_pair)
    for (auto& e : chunk)
      table.entries.push_back(std::move(e));
  sort_entries(table.entries);
  return table;
}

// Polynomials

BinomialPoly structure_poly(const MarkedCycleShape& lambda, const MarkedCycleShape& delta,
                            const MarkedCycleShape& rho)
{
  require_same_m(lambda, delta);
  require_same_m(lambda, rho);
  require_proper(lambda);
  require_proper(delta);
  require_proper(rho);

  BinomialPoly::Coeffs coeffs;
  for (int k = 0; k <= lambda.size() + delta.size() - rho.size(); ++k)
    coeffs[k] = universal_coeff(lambda, delta, rho.pad(k));
  return BinomialPoly(rho.size(), std::move(coeffs));
}

std::map<MarkedCycleShape, BinomialPoly> structure_polys(const MarkedCycleShape& lambda,
                                                         const MarkedCycleShape& delta)
{
  require_proper(lambda);
  require_proper(delta);
  std::map<MarkedCycleShape, BinomialPoly::Coeffs> grouped;
  const auto expansion = universal_expansion(lambda, delta);
  for (const auto& [tau, k] : expansion.coeffs())
    grouped[tau.strip_fixed_stars()][tau.m1()] += k;

  std::map<MarkedCycleShape, BinomialPoly> out;
  for (auto& [rho, coeffs] : grouped)
    out.emplace(rho, BinomialPoly(rho.size(), std::move(coeffs)));
  return out;
}

BigInt brute_force_c(const MarkedCycleShape& lambda_n, const MarkedCycleShape& delta_n,
                     const MarkedCycleShape& rho_n, int n)
{
  require_same_m(lambda_n, delta_n);
  require_same_m(lambda_n, rho_n);
  if (lambda_n.size() != n || delta_n.size() != n || rho_n.size() != n)
    throw std::invalid_argument("brute_force_c needs shapes of size exactly n");

  const int m = rho_n.marked();
  const Permutation target = canonical_representative(rho_n).extend(n);
  std::int64_t count = 0;
  for (const auto& x : enumerate_full_class(lambda_n, n))
    if (marked_type(x.inverse() * target, m) == delta_n)
      ++count;
  return count;
}

int deg2(const PartialPermutation& p)
{
  int fixed = 0;
  const auto d = p.domain();
  const auto w = p.images();
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > p.marked() && w[i] == d[i])
      ++fixed;
  return p.size() + fixed;
}

DegreeBound degree_and_bound(const MarkedCycleShape& lambda, const MarkedCycleShape& delta,
                             const MarkedCycleShape& rho, const BinomialPoly& poly)
{
  const int excess = lambda.size() + delta.size() - rho.size();
  DegreeBound out{std::nullopt, Rational(excess, 2), floor_half(excess)};
  if (!poly.is_zero())
    out.degree = poly.degree();
  return out;
}

DegreeBound degree_and_bound(const MarkedCycleShape& lambda, const MarkedCycleShape& delta,
                             const MarkedCycleShape& rho)
{
  return degree_and_bound(lambda, delta, rho, structure_poly(lambda, delta, rho));
}

} // namespace mcent
