#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// into the library; results are compared against it through canonical text.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Partition numbers p(0..n) by the coin-change recurrence.
inline std::vector<std::int64_t> partition_numbers(int n)
{
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int total = part; total <= n; ++total)
      p[static_cast<std::size_t>(total)] += p[static_cast<std::size_t>(total - part)];
  return p;
}

// A partial permutation of [n] as a map array: map[a] = image, 0 when a is
// outside the domain. Index 0 unused.
struct Partial
{
  std::vector<int> map;

  bool operator<(const Partial& o) const { return map < o.map; }
  bool operator==(const Partial& o) const { return map == o.map; }
};

// Every m-partial permutation of [n].
inline std::vector<Partial> all_partials(int m, int n)
{
  std::vector<Partial> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool has_marked = true;
    for (int a = 1; a <= m; ++a)
      has_marked = has_marked && (mask & (1u << (a - 1)));
    if (!has_marked)
      continue;
    std::vector<int> dom;
    for (int a = 1; a <= n; ++a)
      if (mask & (1u << (a - 1)))
        dom.push_back(a);
    std::vector<int> img = dom;
    do {
      Partial p{std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
      for (std::size_t i = 0; i < dom.size(); ++i)
        p.map[static_cast<std::size_t>(dom[i])] = img[i];
      out.push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
  }
  return out;
}

inline Partial multiply(const Partial& x, const Partial& y)
{
  const std::size_t n = x.map.size() - 1;
  Partial out{std::vector<int>(n + 1, 0)};
  auto ext = [](const Partial& p, int a) { return p.map[static_cast<std::size_t>(a)] ? p.map[static_cast<std::size_t>(a)] : a; };
  for (std::size_t a = 1; a <= n; ++a)
    if (x.map[a] || y.map[a])
      out.map[a] = ext(x, ext(y, static_cast<int>(a)));
  return out;
}

// Canonical text of the m-marked type, built independently of the library:
// marked cycles rotated to their least marked entry and sorted by it, then
// all-star cycles by decreasing length.
inline std::string type_string(const Partial& p, int m)
{
  const std::size_t n = p.map.size() - 1;
  std::vector<bool> seen(n + 1, false);
  std::vector<std::vector<int>> marked;
  std::vector<int> star_lengths;
  for (std::size_t a = 1; a <= n; ++a) {
    if (!p.map[a] || seen[a])
      continue;
    std::vector<int> cyc;
    for (int x = static_cast<int>(a); !seen[static_cast<std::size_t>(x)]; x = p.map[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      cyc.push_back(x <= m ? x : 0);
    }
    int lead = -1;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      if (cyc[i] && (lead < 0 || cyc[i] < cyc[static_cast<std::size_t>(lead)]))
        lead = static_cast<int>(i);
    if (lead < 0) {
      star_lengths.push_back(static_cast<int>(cyc.size()));
    } else {
      std::rotate(cyc.begin(), cyc.begin() + lead, cyc.end());
      marked.push_back(cyc);
    }
  }
  std::sort(marked.begin(), marked.end());
  std::sort(star_lengths.rbegin(), star_lengths.rend());
  std::string s;
  for (const auto& c : marked) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      s += (i ? "," : "") + (c[i] ? std::to_string(c[i]) : std::string("*"));
    s += ')';
  }
  for (int len : star_lengths) {
    s += "(*";
    for (int i = 1; i < len; ++i)
      s += ",*";
    s += ')';
  }
  return s;
}

// Type census of all m-partial permutations of [n].
inline std::map<std::string, std::int64_t> census(int m, int n)
{
  std::map<std::string, std::int64_t> out;
  for (const auto& p : all_partials(m, n))
    ++out[type_string(p, m)];
  return out;
}

// A_lambda(n) A_delta(n) by multiplying every pair, then dividing each type's
// pair count by the size of that type's class. Returns type text -> k.
inline std::map<std::string, std::int64_t> expansion(const std::string& lambda,
                                                     const std::string& delta, int m, int n)
{
  const auto all = all_partials(m, n);
  std::vector<Partial> left;
  std::vector<Partial> right;
  std::map<std::string, std::int64_t> sizes;
  for (const auto& p : all) {
    const auto t = type_string(p, m);
    ++sizes[t];
    if (t == lambda)
      left.push_back(p);
    if (t == delta)
      right.push_back(p);
  }
  std::map<std::string, std::int64_t> pairs;
  for (const auto& a : left)
    for (const auto& b : right)
      ++pairs[type_string(multiply(a, b), m)];
  std::map<std::string, std::int64_t> out;
  for (const auto& [t, c] : pairs)
    out[t] = c / sizes[t];
  return out;
}

// Coefficient of the class of g in K_lambda K_delta in S_n, by multiplying
// all pairs of full permutations and counting those equal to g. Full
// permutations are the partials with domain [n].
inline std::int64_t centralizer_coeff(const std::string& lambda, const std::string& delta,
                                      const Partial& g, int m)
{
  const int n = static_cast<int>(g.map.size()) - 1;
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 1);
  std::vector<Partial> left;
  std::vector<Partial> right;
  auto img = ids;
  do {
    Partial p{std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
    for (int a = 1; a <= n; ++a)
      p.map[static_cast<std::size_t>(a)] = img[static_cast<std::size_t>(a - 1)];
    const auto t = type_string(p, m);
    if (t == lambda)
      left.push_back(p);
    if (t == delta)
      right.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  std::int64_t count = 0;
  for (const auto& a : left)
    for (const auto& b : right)
      if (multiply(a, b) == g)
        ++count;
  return count;
}

} // namespace oracle
