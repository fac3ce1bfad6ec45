#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mcent/numeric.hpp"
#include "mcent/shape.hpp"

namespace mcent {

/// A permutation of [n], stored as its image array.
class Permutation
{
public:
  Permutation() = default;

  /// images[i] is the image of i + 1. Throws std::invalid_argument unless the
  /// array is a bijection of [n].
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Builds from disjoint cycles over [n]; unlisted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int a) const { return images_[static_cast<std::size_t>(a - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  /// Composition, right factor applied first: (p * q)(a) = p(q(a)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const noexcept;

  /// Cycle decomposition including fixed points, each cycle led by its minimum.
  std::vector<std::vector<int>> cycles() const;

  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// An m-partial permutation (d, w): a finite domain d containing [m] and a
/// bijection w of d. The domain is kept sorted; images are parallel to it.
class PartialPermutation
{
public:
  PartialPermutation() = default;

  /// Throws std::invalid_argument unless [m] is in the domain, the domain has
  /// no repeats or non-positive entries, and images permute the domain.
  PartialPermutation(int m, std::vector<int> domain, std::vector<int> images);

  /// ([m], identity), the unit of the semigroup.
  static PartialPermutation identity(int m);

  /// Domain d with w given by disjoint cycles inside d; unlisted points of d are fixed.
  static PartialPermutation from_cycles(int m, std::vector<int> domain,
                                        const std::vector<std::vector<int>>& cycles);

  int marked() const noexcept { return m_; }
  int size() const noexcept { return static_cast<int>(domain_.size()); }
  std::span<const int> domain() const noexcept { return domain_; }
  std::span<const int> images() const noexcept { return images_; }

  bool contains(int a) const noexcept;

  /// w(a) for a in d, a otherwise (the extension to the ambient set).
  int apply(int a) const noexcept;

  /// Largest domain element, or 0 for an empty domain.
  int max_point() const noexcept { return domain_.empty() ? 0 : domain_.back(); }

  /// The permutation of [n] agreeing with w on d and fixing [n] \ d.
  /// Throws std::invalid_argument when d is not inside [n].
  Permutation extend(int n) const;

  /// Text form "(d={1,2,5}, w=(1,5)(2))", for diagnostics.
  std::string str() const;

  std::size_t hash() const noexcept;

  auto operator<=>(const PartialPermutation&) const = default;

private:
  int m_ = 0;
  std::vector<int> domain_;
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const PartialPermutation& p);

struct PartialPermutationHash
{
  std::size_t operator()(const PartialPermutation& p) const noexcept { return p.hash(); }
};

/// Restriction of a permutation to a domain it stabilizes.
/// Throws std::invalid_argument if v does not map `domain` onto itself.
PartialPermutation restrict_to(const Permutation& v, std::vector<int> domain, int m);

/// Semigroup product (d1 u d2, ext(w1) o ext(w2) restricted to d1 u d2).
/// Throws std::invalid_argument on mismatched m.
PartialPermutation product(const PartialPermutation& lhs, const PartialPermutation& rhs);

inline PartialPermutation operator*(const PartialPermutation& lhs, const PartialPermutation& rhs)
{
  return product(lhs, rhs);
}

/// Cycle decomposition of w on d with entries outside [m] replaced by stars.
MarkedCycleShape marked_type(const PartialPermutation& p);

/// m-marked cycle type of a permutation of [n].
MarkedCycleShape marked_type(const Permutation& v, int m);

/// sigma . (d, w) = (sigma(d), sigma w sigma^-1). Throws std::invalid_argument
/// when sigma moves a point of [m] or d does not fit in sigma's degree.
PartialPermutation conjugate(const Permutation& sigma, const PartialPermutation& p);

/// [m] together with the points moved by v, sorted.
std::vector<int> supp_m(const Permutation& v, int m);

/// Closed-form count sum_k C(n-m, k) (m+k)!. Throws std::invalid_argument when m > n.
BigInt count_partial_perms(int m, int n);

/// Adjacent transpositions (i, i+1), m+1 <= i <= n-1, generating Stab_n(m).
std::vector<Permutation> stabilizer_generators(int n, int m);

/// Every m-partial permutation of [n] by direct enumeration of domains and
/// bijections, sorted.
std::vector<PartialPermutation> enumerate_partial_perms(int m, int n);

/// Stab_n(m)-orbit of p, computed by closure under the adjacent-transposition generators.
std::vector<PartialPermutation> stabilizer_orbit(const PartialPermutation& p, int n);

} // namespace mcent
