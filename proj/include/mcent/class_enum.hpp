#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcent/numeric.hpp"
#include "mcent/partial_perm.hpp"
#include "mcent/shape.hpp"

namespace mcent {

/// Finite integer combination of m-partial permutations of [n], an element of
/// the semigroup algebra. Zero coefficients are never stored.
class FormalSum
{
public:
  using Terms = std::map<PartialPermutation, BigInt>;

  FormalSum(int m, int n);

  int marked() const noexcept { return m_; }
  int ambient() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Throws std::invalid_argument if p has the wrong m or leaves [n].
  void add(const PartialPermutation& p, const BigInt& coeff = 1);

  BigInt coefficient(const PartialPermutation& p) const;

  FormalSum operator+(const FormalSum& rhs) const;
  FormalSum operator*(const FormalSum& rhs) const;
  FormalSum scaled(const BigInt& factor) const;

  bool operator==(const FormalSum&) const = default;

private:
  void check_compatible(const FormalSum& rhs) const;

  int m_;
  int n_;
  Terms terms_;
};

/// Finite integer combination of permutations of [n], an element of Z[S_n].
class GroupAlgebraSum
{
public:
  using Terms = std::map<Permutation, BigInt>;

  explicit GroupAlgebraSum(int n);

  int degree() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  void add(const Permutation& p, const BigInt& coeff = 1);
  BigInt coefficient(const Permutation& p) const;

  GroupAlgebraSum operator+(const GroupAlgebraSum& rhs) const;
  GroupAlgebraSum operator*(const GroupAlgebraSum& rhs) const;
  GroupAlgebraSum scaled(const BigInt& factor) const;

  bool operator==(const GroupAlgebraSum&) const = default;

private:
  int n_;
  Terms terms_;
};

/// Every bijection of `domain` (sorted, containing [m]) whose marked type is
/// `shape`, as image arrays parallel to `domain`. Requires
/// shape.size() == domain.size(). Generated without repeats, unsorted.
std::vector<std::vector<int>> bijections_of_type(const MarkedCycleShape& shape,
                                                 const std::vector<int>& domain);

/// A_rho(n): the partial permutations of [n] with marked type rho, sorted by
/// (domain, images). Throws std::invalid_argument when |rho| > n.
std::vector<PartialPermutation> enumerate_class(const MarkedCycleShape& rho, int n);

/// Permutations of [n] with marked type lambda, sorted. Requires |lambda| == n.
std::vector<Permutation> enumerate_full_class(const MarkedCycleShape& lambda, int n);

enum class CountMethod { enumerate, formula };

/// |A_rho(n)|. `formula` multiplies C(n - |rho| + m1, m1) by the enumerated
/// size of the completed class.
BigInt class_size(const MarkedCycleShape& rho, int n, CountMethod method);

/// Sum of the members of A_rho(n), each with coefficient 1.
FormalSum class_sum(const MarkedCycleShape& rho, int n);

/// K_lambda in Z[S_n]. Throws std::invalid_argument unless |lambda| == n.
GroupAlgebraSum k_class_sum(const MarkedCycleShape& lambda, int n);

/// Linear extension of (d, w) -> extension of w to [n].
GroupAlgebraSum psi(const FormalSum& x);

/// True iff z commutes with every adjacent transposition generating Stab_n(m);
/// this is equivalent to commuting with all of Stab_n(m).
bool centralizer_check(const GroupAlgebraSum& z, int m);

} // namespace mcent
