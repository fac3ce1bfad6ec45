#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcent/class_enum.hpp"
#include "mcent/numeric.hpp"
#include "mcent/partial_perm.hpp"
#include "mcent/polynomials.hpp"
#include "mcent/shape.hpp"

namespace mcent {

/// Expansion of an invariant element in a class-sum basis: the A_rho(n) basis
/// of the partial-permutation algebra, or the K_rho basis of Z_{n,m}.
class ClassExpansion
{
public:
  using Coeffs = std::map<MarkedCycleShape, BigInt>;

  ClassExpansion(int m, int n);

  int marked() const noexcept { return m_; }
  int ambient() const noexcept { return n_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }

  void add(const MarkedCycleShape& shape, const BigInt& coeff);
  BigInt coefficient(const MarkedCycleShape& shape) const;

  /// Shapes of size at most `size` only.
  ClassExpansion truncated(int size) const;

  /// E.g. "2*A[(1,2)(*,*)(*,*)] + 3*A[(1,2)(*,*,*)]" with basis = "A".
  std::string str(const std::string& basis) const;

  bool operator==(const ClassExpansion&) const = default;

private:
  int m_;
  int n_;
  Coeffs coeffs_;
};

/// Expands A_lambda(n) A_delta(n) by multiplying the two class sums term by
/// term and bucketing the products by marked type. Every bucket is checked to
/// be a whole class with a uniform coefficient.
ClassExpansion multiply_invariant(const MarkedCycleShape& lambda, const MarkedCycleShape& delta,
                                  int n);

/// The representative of rho on d = [|rho|]: stars are filled with m+1, m+2, ...
/// in canonical reading order.
PartialPermutation canonical_representative(const MarkedCycleShape& rho);

/// k_{lambda delta}^rho as the number of factorizations (d1,w1)(d2,w2) = (d,w)
/// of the canonical representative of rho with factors of types lambda, delta.
BigInt universal_coeff(const MarkedCycleShape& lambda, const MarkedCycleShape& delta,
                       const MarkedCycleShape& rho);

/// All nonzero k_{lambda delta}^rho at once. Fixes one member a of A_lambda(N)
/// with N = |lambda| + |delta|, counts the types of a*b over b in A_delta(N),
/// and rescales by |A_lambda(N)| / |A_rho(N)|.
ClassExpansion universal_expansion(const MarkedCycleShape& lambda,
                                   const MarkedCycleShape& delta);

/// Image under psi of an A-basis expansion, truncated to [n]:
/// each k A_tau contributes k C(n - |tau| + m1(tau), m1(tau)) K_{tau completed to n}.
ClassExpansion project_to_centralizer(const ClassExpansion& expansion, int n);

struct TableEntry
{
  MarkedCycleShape lambda;
  MarkedCycleShape delta;
  MarkedCycleShape rho;
  BigInt k;

  bool operator==(const TableEntry&) const = default;
};

/// Nonzero universal coefficients for every ordered pair of shapes of size
/// at most max_size, sorted by the canonical texts of (lambda, delta, rho).
struct CoefficientTable
{
  int m = 0;
  int max_size = 0;
  std::vector<TableEntry> entries;

  BigInt lookup(const MarkedCycleShape& lambda, const MarkedCycleShape& delta,
                const MarkedCycleShape& rho) const;

  bool operator==(const CoefficientTable&) const = default;
};

/// Sorts entries into the serialization order.
void sort_entries(std::vector<TableEntry>& entries);

/// Pairs are distributed over `threads` workers; output does not depend on it.
CoefficientTable build_table(int m, int max_size, unsigned threads = 1);

/// c(n) = sum_k k_{lambda delta}^{rho^k} C(n - |rho|, k) for proper shapes.
/// Throws std::invalid_argument if any shape is not proper or m differs.
BinomialPoly structure_poly(const MarkedCycleShape& lambda, const MarkedCycleShape& delta,
                            const MarkedCycleShape& rho);

/// structure_poly for every proper rho with a nonzero polynomial, derived from
/// one universal_expansion.
std::map<MarkedCycleShape, BinomialPoly> structure_polys(const MarkedCycleShape& lambda,
                                                         const MarkedCycleShape& delta);

/// Coefficient of K_rho in K_lambda K_delta in Z[S_n] by direct counting:
/// with g the representative of rho, counts x of type lambda with x^-1 g of type delta.
BigInt brute_force_c(const MarkedCycleShape& lambda_n, const MarkedCycleShape& delta_n,
                     const MarkedCycleShape& rho_n, int n);

/// |d| plus the number of fixed points of w outside [m].
int deg2(const PartialPermutation& p);

struct DegreeBound
{
  std::optional<int> degree; // empty for the zero polynomial
  Rational bound;            // (|lambda| + |delta| - |rho|) / 2
  int floor_bound;

  bool holds() const { return !degree || *degree <= floor_bound; }
};

DegreeBound degree_and_bound(const MarkedCycleShape& lambda, const MarkedCycleShape& delta,
                             const MarkedCycleShape& rho);

/// Same, with a precomputed structure polynomial.
DegreeBound degree_and_bound(const MarkedCycleShape& lambda, const MarkedCycleShape& delta,
                             const MarkedCycleShape& rho, const BinomialPoly& poly);

/// Size of A_rho(n) by enumeration, memoized across threads.
BigInt cached_class_size(const MarkedCycleShape& rho, int n);

} // namespace mcent
