#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "mcent/class_enum.hpp"
#include "mcent/partial_perm.hpp"
#include "oracles.hpp"

using namespace mcent;

namespace {

PartialPermutation random_partial(int m, int n, std::mt19937_64& rng)
{
  std::vector<int> d;
  for (int a = 1; a <= n; ++a)
    if (a <= m || rng() % 2)
      d.push_back(a);
  auto w = d;
  std::shuffle(w.begin(), w.end(), rng);
  return PartialPermutation(m, d, w);
}

Permutation random_stabilizer(int m, int n, std::mt19937_64& rng)
{
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin() + m, images.end(), rng);
  return Permutation(images);
}

} // namespace

TEST_CASE("Permutation basics")
{
  auto p = Permutation::from_cycles(5, {{1, 3, 5}});
  CHECK(p(1) == 3);
  CHECK(p(5) == 1);
  CHECK(p(2) == 2);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.str() == "(1,3,5)(2)(4)");
  // right factor first
  auto a = Permutation::from_cycles(3, {{1, 2}});
  auto b = Permutation::from_cycles(3, {{2, 3}});
  CHECK((a * b)(3) == 1);
  CHECK((a * b)(2) == 3);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("PartialPermutation validation and text form")
{
  auto p = PartialPermutation::from_cycles(2, {1, 2, 5}, {{1, 5}});
  CHECK(p.str() == "(d={1,2,5}, w=(1,5)(2))");
  CHECK(PartialPermutation::identity(0).str() == "(d={}, w=())");
  CHECK_THROWS_AS(PartialPermutation(2, {1, 3}, {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(PartialPermutation(0, {1, 1}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PartialPermutation(0, {1, 2}, {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(PartialPermutation(0, {0}, {0}), std::invalid_argument);
}

TEST_CASE("extend")
{
  CHECK(PartialPermutation::identity(2).extend(4).is_identity());
  auto p = PartialPermutation::from_cycles(2, {1, 2, 3}, {{1, 3}});
  CHECK(p.extend(5) == Permutation::from_cycles(5, {{1, 3}}));
  CHECK_THROWS_AS(p.extend(2), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int m = static_cast<int>(rng() % 3) % (n + 1);
    auto q = random_partial(m, n, rng);
    auto d = std::vector<int>(q.domain().begin(), q.domain().end());
    CHECK(restrict_to(q.extend(n), d, m) == q);
  }
}

TEST_CASE("product")
{
  auto p = PartialPermutation::from_cycles(2, {1, 2, 3, 5}, {{3, 5, 1}});
  auto e = PartialPermutation::identity(2);
  CHECK(e * p == p);
  CHECK(p * e == p);

  auto x = PartialPermutation::from_cycles(2, {1, 2, 3}, {{1, 3}});
  auto y = PartialPermutation::from_cycles(2, {1, 2, 4}, {{2, 4}});
  CHECK(x * y == PartialPermutation::from_cycles(2, {1, 2, 3, 4}, {{1, 3}, {2, 4}}));

  CHECK_THROWS_AS(PartialPermutation::identity(1) * PartialPermutation::identity(2),
                  std::invalid_argument);
}

TEST_CASE("product agrees with the brute-force reference")
{
  for (int m = 0; m <= 1; ++m) {
    const int n = 4;
    const auto all = oracle::all_partials(m, n);
    auto to_lib = [&](const oracle::Partial& o) {
      std::vector<int> d, w;
      for (int a = 1; a <= n; ++a)
        if (o.map[static_cast<std::size_t>(a)]) {
          d.push_back(a);
          w.push_back(o.map[static_cast<std::size_t>(a)]);
        }
      return PartialPermutation(m, d, w);
    };
    for (std::size_t i = 0; i < all.size(); i += 3)
      for (std::size_t j = 0; j < all.size(); j += 5)
        CHECK(to_lib(oracle::multiply(all[i], all[j])) == to_lib(all[i]) * to_lib(all[j]));
  }
}

TEST_CASE("semigroup laws and psi at element level on random triples")
{
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int m = static_cast<int>(rng() % 3) % (n + 1);
    auto a = random_partial(m, n, rng);
    auto b = random_partial(m, n, rng);
    auto c = random_partial(m, n, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).extend(n) == a.extend(n) * b.extend(n));
    CHECK(PartialPermutation::identity(m) * a == a);
  }
}

TEST_CASE("marked_type")
{
  auto full = Permutation::from_cycles(7, {{1, 3, 5}, {4, 7}});
  CHECK(marked_type(full, 2).str() == "(1,*,*)(2)(*,*)(*)");

  auto p = PartialPermutation::from_cycles(5, {1, 2, 3, 4, 5, 7, 9, 10, 15},
                                           {{1, 9}, {3, 7, 10}, {5, 15, 4}});
  CHECK(marked_type(p) == parse_shape("(1,*)(3,*,*)(5,*,4)(2)", 5));
  CHECK(marked_type(p).size() == p.size());

  CHECK(marked_type(PartialPermutation::identity(2)).str() == "(1)(2)");
}

TEST_CASE("conjugate")
{
  auto p = PartialPermutation::from_cycles(1, {1, 2}, {{1, 2}});
  CHECK(conjugate(Permutation::identity(3), p) == p);
  CHECK(conjugate(Permutation::from_cycles(3, {{2, 3}}), p) ==
        PartialPermutation::from_cycles(1, {1, 3}, {{1, 3}}));
  CHECK_THROWS_AS(conjugate(Permutation::from_cycles(3, {{1, 3}}), p), std::invalid_argument);

  std::mt19937_64 rng(99);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int m = static_cast<int>(rng() % 3) % (n + 1);
    auto q = random_partial(m, n, rng);
    auto sigma = random_stabilizer(m, n, rng);
    CHECK(marked_type(conjugate(sigma, q)) == marked_type(q));
    CHECK(conjugate(sigma, q).extend(n) == sigma * q.extend(n) * sigma.inverse());
  }
}

TEST_CASE("orbits under Stab_n(m) are exactly the marked types")
{
  for (int m = 0; m <= 2; ++m) {
    for (int n = m; n <= 5; ++n) {
      std::map<PartialPermutation, std::size_t> orbit_id;
      std::size_t next = 0;
      for (const auto& p : enumerate_partial_perms(m, n)) {
        if (orbit_id.count(p))
          continue;
        for (const auto& q : stabilizer_orbit(p, n))
          orbit_id[q] = next;
        ++next;
      }
      std::map<MarkedCycleShape, std::set<std::size_t>> ids_by_type;
      std::map<std::size_t, std::set<MarkedCycleShape>> types_by_id;
      for (const auto& [p, id] : orbit_id) {
        ids_by_type[marked_type(p)].insert(id);
        types_by_id[id].insert(marked_type(p));
      }
      for (const auto& [t, ids] : ids_by_type)
        CHECK(ids.size() == 1);
      for (const auto& [id, types] : types_by_id)
        CHECK(types.size() == 1);
    }
  }
}

TEST_CASE("supp_m")
{
  CHECK(supp_m(Permutation::identity(5), 2) == std::vector<int>{1, 2});
  CHECK(supp_m(Permutation::from_cycles(6, {{1, 3, 4}}), 2) == std::vector<int>{1, 2, 3, 4});

  for (int m = 0; m <= 2; ++m)
    for (const auto& rho : enumerate_shapes(m, 5, false))
      for (const auto& v : enumerate_full_class(rho.complete(6), 6))
        CHECK(static_cast<int>(supp_m(v, m).size()) == rho.size() - rho.m1());
}

TEST_CASE("count_partial_perms")
{
  CHECK(count_partial_perms(1, 2) == 3);
  CHECK(count_partial_perms(0, 0) == 1);
  CHECK(count_partial_perms(2, 4) == 38);
  CHECK_THROWS_AS(count_partial_perms(3, 2), std::invalid_argument);

  for (int m = 0; m <= 2; ++m)
    for (int n = m; n <= 6; ++n) {
      CHECK(count_partial_perms(m, n) == enumerate_partial_perms(m, n).size());
      CHECK(count_partial_perms(m, n) == oracle::all_partials(m, n).size());
    }
}

TEST_CASE("stabilizer generators")
{
  CHECK(stabilizer_generators(3, 2).empty());
  CHECK(stabilizer_generators(5, 2).size() == 2);
  for (const auto& g : stabilizer_generators(6, 2))
    CHECK((g(1) == 1 && g(2) == 2));
}
