#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mcent {

/// Entry value used for the star symbol inside a cycle; marked entries are 1..m.
inline constexpr int kStar = 0;

using Cycle = std::vector<int>;

/// An m-marked cycle shape: a multiset of cycles over [m] and the star symbol
/// in which every element of [m] occurs exactly once.
///
/// Values are always held in canonical form. Cycles that carry a marked entry
/// come first, each rotated so that its smallest marked entry leads, ordered by
/// that entry. All-star cycles follow in order of decreasing length. Two
/// shapes are equal iff their canonical forms are equal.
class MarkedCycleShape
{
public:
  /// The empty shape with m = 0.
  MarkedCycleShape() = default;

  /// Validates and canonicalizes. Throws std::invalid_argument when a marked
  /// entry is outside [1,m], repeated or missing, or a cycle is empty.
  MarkedCycleShape(int m, std::vector<Cycle> cycles);

  /// Identity shape (1)(2)...(m).
  static MarkedCycleShape identity(int m);

  int marked() const noexcept { return m_; }
  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }

  int size() const noexcept { return size_; }

  /// Number of (*) cycles. Marked fixed points (a) are not counted.
  int m1() const noexcept;

  bool is_proper() const noexcept { return m1() == 0; }

  /// Appends k cycles (*).
  MarkedCycleShape pad(int k) const;

  /// Pads up to size n. Throws std::invalid_argument when n < size().
  MarkedCycleShape complete(int n) const;

  /// Removes every (*) cycle, giving the proper shape with the same completions.
  MarkedCycleShape strip_fixed_stars() const;

  /// Canonical text, e.g. "(1,*,3)(2)(4,5)(*,*)(*)". Empty shape prints "".
  std::string str() const;

  std::size_t hash() const noexcept;

  std::strong_ordering operator<=>(const MarkedCycleShape& other) const;
  bool operator==(const MarkedCycleShape& other) const = default;

private:
  int m_ = 0;
  int size_ = 0;
  std::vector<Cycle> cycles_;
};

std::ostream& operator<<(std::ostream& os, const MarkedCycleShape& shape);

struct ShapeHash
{
  std::size_t operator()(const MarkedCycleShape& s) const noexcept { return s.hash(); }
};

/// Parses the text grammar
///   shape := cycle* ; cycle := "(" entry ("," entry)* ")" ; entry := integer | "*"
/// with whitespace ignored. Throws std::invalid_argument on malformed input.
MarkedCycleShape parse_shape(std::string_view text, int m);

/// All m-marked cycle shapes of size exactly `size_bound` (exact) or of every
/// size in [m, size_bound], sorted, without duplicates.
/// Throws std::invalid_argument when size_bound < m.
std::vector<MarkedCycleShape> enumerate_shapes(int m, int size_bound, bool exact);

} // namespace mcent
