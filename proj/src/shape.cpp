#include "mcent/shape.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

namespace mcent {

namespace {

bool is_all_star(const Cycle& c)
{
  return std::all_of(c.begin(), c.end(), [](int e) { return e == kStar; });
}

int min_marked(const Cycle& c)
{
  int best = 0;
  for (int e : c)
    if (e != kStar && (best == 0 || e < best))
      best = e;
  return best;
}

} // namespace

MarkedCycleShape::MarkedCycleShape(int m, std::vector<Cycle> cycles)
: m_(m)
{
  if (m < 0)
    throw std::invalid_argument("m must be non-negative");

  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  std::vector<Cycle> marked;
  std::vector<Cycle> stars;
  std::string problems;
  auto problem = [&](const std::string& text) {
    problems += problems.empty() ? text : "; " + text;
  };

  for (auto& c : cycles) {
    if (c.empty())
      throw std::invalid_argument("empty cycle");
    for (int e : c) {
      if (e == kStar)
        continue;
      if (e < 1 || e > m)
        problem("marked entry " + std::to_string(e) + " outside [1," + std::to_string(m) + "]");
      else if (seen[e])
        problem("marked entry " + std::to_string(e) + " repeated");
      else
        seen[e] = true;
    }
    size_ += static_cast<int>(c.size());

    if (is_all_star(c)) {
      stars.push_back(std::move(c));
    } else {
      auto lead = std::find(c.begin(), c.end(), min_marked(c));
      std::rotate(c.begin(), lead, c.end());
      marked.push_back(std::move(c));
    }
  }

  for (int a = 1; a <= m; ++a)
    if (!seen[a])
      problem("marked entry " + std::to_string(a) + " missing");
  if (!problems.empty())
    throw std::invalid_argument(problems);

  std::sort(marked.begin(), marked.end(),
            [](const Cycle& x, const Cycle& y) { return x.front() < y.front(); });
  std::stable_sort(stars.begin(), stars.end(),
                   [](const Cycle& x, const Cycle& y) { return x.size() > y.size(); });

  cycles_ = std::move(marked);
  cycles_.insert(cycles_.end(), std::make_move_iterator(stars.begin()),
                 std::make_move_iterator(stars.end()));
}

MarkedCycleShape MarkedCycleShape::identity(int m)
{
  std::vector<Cycle> cycles;
  for (int a = 1; a <= m; ++a)
    cycles.push_back({a});
  return MarkedCycleShape(m, std::move(cycles));
}

int MarkedCycleShape::m1() const noexcept
{
  return static_cast<int>(std::count_if(cycles_.begin(), cycles_.end(), [](const Cycle& c) {
    return c.size() == 1 && c.front() == kStar;
  }));
}

MarkedCycleShape MarkedCycleShape::pad(int k) const
{
  if (k < 0)
    throw std::invalid_argument("padding count must be non-negative");
  auto cycles = cycles_;
  cycles.insert(cycles.end(), static_cast<std::size_t>(k), Cycle{kStar});
  return MarkedCycleShape(m_, std::move(cycles));
}

MarkedCycleShape MarkedCycleShape::complete(int n) const
{
  if (n < size_)
    throw std::invalid_argument("cannot complete shape of size " + std::to_string(size_) +
                                " to " + std::to_string(n));
  return pad(n - size_);
}

MarkedCycleShape MarkedCycleShape::strip_fixed_stars() const
{
  std::vector<Cycle> cycles;
  for (const auto& c : cycles_)
    if (!(c.size() == 1 && c.front() == kStar))
      cycles.push_back(c);
  return MarkedCycleShape(m_, std::move(cycles));
}

std::string MarkedCycleShape::str() const
{
  std::string out;
  for (const auto& c : cycles_) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        out += ',';
      out += c[i] == kStar ? std::string("*") : std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

std::size_t MarkedCycleShape::hash() const noexcept
{
  std::size_t h = std::hash<int>{}(m_);
  for (const auto& c : cycles_) {
    for (int e : c)
      h = h * 1000003u ^ std::hash<int>{}(e + 1);
    h = h * 31u + 0x9e3779b9u;
  }
  return h;
}

std::strong_ordering MarkedCycleShape::operator<=>(const MarkedCycleShape& other) const
{
  if (auto c = m_ <=> other.m_; c != 0)
    return c;
  if (auto c = size_ <=> other.size_; c != 0)
    return c;
  return cycles_ <=> other.cycles_;
}

std::ostream& operator<<(std::ostream& os, const MarkedCycleShape& shape)
{
  return os << shape.str();
}

MarkedCycleShape parse_shape(std::string_view text, int m)
{
  std::vector<Cycle> cycles;
  std::size_t pos = 0;

  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("malformed shape at offset " + std::to_string(pos) + ": " + what);
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      fail("expected '('");
    ++pos;
    Cycle cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size())
        fail("unterminated cycle");
      if (text[pos] == ')') {
        if (cycle.empty())
          throw std::invalid_argument("empty cycle");
        fail("expected entry");
      }
      if (text[pos] == '*') {
        cycle.push_back(kStar);
        ++pos;
      } else if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + (text[pos] - '0');
          if (value > 1'000'000)
            fail("integer too large");
          ++pos;
        }
        if (value == 0)
          throw std::invalid_argument("marked entry 0 outside [1," + std::to_string(m) + "]");
        cycle.push_back(static_cast<int>(value));
      } else {
        fail("expected integer or '*'");
      }
      skip_ws();
      if (pos >= text.size())
        fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return MarkedCycleShape(m, std::move(cycles));
}

namespace {

// Integer partitions of `total` into parts <= max_part, parts non-increasing.
void partitions(int total, int max_part, std::vector<int>& parts,
                std::vector<std::vector<int>>& out)
{
  if (total == 0) {
    out.push_back(parts);
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    parts.push_back(p);
    partitions(total - p, p, parts, out);
    parts.pop_back();
  }
}

// Weak compositions of `total` into `slots` parts.
void compositions(int total, int slots, std::vector<int>& parts,
                  std::vector<std::vector<int>>& out)
{
  if (slots == 0) {
    if (total == 0)
      out.push_back(parts);
    return;
  }
  for (int p = 0; p <= total; ++p) {
    parts.push_back(p);
    compositions(total - p, slots - 1, parts, out);
    parts.pop_back();
  }
}

// Every shape of size `size`: a permutation of [m] fixes how marked entries
// share cycles, a weak composition places stars in the gap after each marked
// entry, and a partition of the remaining stars gives the all-star cycles.
void shapes_of_size(int m, int size, std::set<MarkedCycleShape>& out)
{
  const int stars = size - m;
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);

  do {
    for (int in_marked = 0; in_marked <= stars; ++in_marked) {
      std::vector<std::vector<int>> comps;
      std::vector<int> scratch;
      compositions(in_marked, m, scratch, comps);
      std::vector<std::vector<int>> parts;
      scratch.clear();
      partitions(stars - in_marked, stars - in_marked, scratch, parts);

      for (const auto& gaps : comps) {
        std::vector<Cycle> marked_cycles;
        std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
        for (int start = 1; start <= m; ++start) {
          if (used[start])
            continue;
          Cycle c;
          for (int a = start; !used[a]; a = perm[a - 1]) {
            used[a] = true;
            c.push_back(a);
            c.insert(c.end(), static_cast<std::size_t>(gaps[a - 1]), kStar);
          }
          marked_cycles.push_back(std::move(c));
        }
        for (const auto& lengths : parts) {
          auto cycles = marked_cycles;
          for (int len : lengths)
            cycles.emplace_back(static_cast<std::size_t>(len), kStar);
          out.insert(MarkedCycleShape(m, std::move(cycles)));
        }
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace

std::vector<MarkedCycleShape> enumerate_shapes(int m, int size_bound, bool exact)
{
  if (m < 0)
    throw std::invalid_argument("m must be non-negative");
  if (size_bound < m)
    throw std::invalid_argument("size bound " + std::to_string(size_bound) +
                                " is smaller than m = " + std::to_string(m));
  std::set<MarkedCycleShape> found;
  for (int s = exact ? size_bound : m; s <= size_bound; ++s)
    shapes_of_size(m, s, found);
  return {found.begin(), found.end()};
}

} // namespace mcent
