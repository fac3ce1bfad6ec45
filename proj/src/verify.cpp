#include "mcent/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mcent/class_enum.hpp"
#include "mcent/coeff_engine.hpp"
#include "mcent/parallel.hpp"
#include "mcent/partial_perm.hpp"
#include "mcent/shape.hpp"

namespace mcent {

namespace {

constexpr std::size_t kMaxNotes = 20;

// Thread-safe check counter for one suite.
class Recorder
{
public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  void check(bool ok, const std::string& what)
  {
    std::lock_guard lock(mutex_);
    ++report_.checks;
    if (!ok) {
      ++report_.failures;
      if (report_.notes.size() < kMaxNotes)
        report_.notes.push_back("FAIL " + what);
    }
  }

  // Checks that `describe` is only evaluated on failure.
  template <typename F>
  void check_lazy(bool ok, F&& describe)
  {
    if (ok) {
      std::lock_guard lock(mutex_);
      ++report_.checks;
      return;
    }
    check(false, describe());
  }

  void note(const std::string& text)
  {
    std::lock_guard lock(mutex_);
    report_.notes.push_back(text);
  }

  SuiteReport take() { return std::move(report_); }

private:
  std::mutex mutex_;
  SuiteReport report_;
};

std::vector<MarkedCycleShape> proper_shapes(int m, int max_size)
{
  std::vector<MarkedCycleShape> out;
  if (max_size < m)
    return out;
  for (auto& s : enumerate_shapes(m, max_size, false))
    if (s.is_proper())
      out.push_back(std::move(s));
  return out;
}

std::vector<MarkedCycleShape> shapes_upto(int m, int max_size)
{
  return max_size < m ? std::vector<MarkedCycleShape>{} : enumerate_shapes(m, max_size, false);
}

// Exhaustive type census of all m-partial permutations of [n].
std::map<MarkedCycleShape, BigInt> type_census(int m, int n)
{
  std::map<MarkedCycleShape, BigInt> census;
  for (const auto& p : enumerate_partial_perms(m, n))
    census[marked_type(p)] += 1;
  return census;
}

PartialPermutation random_partial_perm(int m, int n, std::mt19937_64& rng)
{
  std::vector<int> domain;
  for (int a = 1; a <= n; ++a)
    if (a <= m || (rng() & 1u))
      domain.push_back(a);
  auto images = domain;
  std::shuffle(images.begin(), images.end(), rng);
  return PartialPermutation(m, std::move(domain), std::move(images));
}

// Full K-expansion of K_lambda K_delta in Z[S_n]: fixes one x of type lambda,
// counts types of x*y over y of type delta, and rescales by |K_lambda| / |K_rho|.
std::map<MarkedCycleShape, BigInt> centralizer_expansion(const MarkedCycleShape& lambda_n,
                                                         const MarkedCycleShape& delta_n, int n)
{
  const int m = lambda_n.marked();
  const Permutation x = canonical_representative(lambda_n).extend(n);
  std::map<MarkedCycleShape, std::int64_t> hits;
  for (const auto& y : enumerate_full_class(delta_n, n))
    ++hits[marked_type(x * y, m)];
  const BigInt left = cached_class_size(lambda_n, n);
  std::map<MarkedCycleShape, BigInt> out;
  for (const auto& [rho, count] : hits) {
    const BigInt size = cached_class_size(rho, n);
    if ((left * count) % size != 0)
      throw std::logic_error("non-integral centralizer coefficient");
    out[rho] = left * count / size;
  }
  return out;
}

void suite_prop_size(const VerifyConfig& cfg, Recorder& rec)
{
  for (int m = 0; m <= cfg.m; ++m) {
    for (int n = m; n <= cfg.max_n; ++n) {
      const auto census = type_census(m, n);
      for (const auto& rho : shapes_upto(m, std::min(cfg.max_size, n))) {
        const BigInt by_enum = class_size(rho, n, CountMethod::enumerate);
        const BigInt by_formula = class_size(rho, n, CountMethod::formula);
        auto it = census.find(rho);
        const BigInt brute = it == census.end() ? BigInt(0) : it->second;
        rec.check_lazy(by_enum == by_formula && by_enum == brute, [&] {
          return "|A_" + rho.str() + "(" + std::to_string(n) + ")|: enumerate " + by_enum.str() +
                 ", formula " + by_formula.str() + ", exhaustive " + brute.str();
        });
      }
    }
  }
  if (cfg.m >= 2 && cfg.max_n >= 6) {
    const auto lambda = parse_shape("(1,*,*)(2)(*)", 2);
    const BigInt big = class_size(lambda, 6, CountMethod::enumerate);
    const BigInt small = class_size(lambda.complete(6), 6, CountMethod::enumerate);
    const BigInt factor = binomial(6 - lambda.size() + lambda.m1(), lambda.m1());
    rec.check(big == 24 && small == 12 && factor == 2 && big == factor * small,
              "|A_(1,*,*)(2)(*)(6)| = 24 = 2 * 12");
    rec.note("|A_(1,*,*)(2)(*)(6)| = " + big.str() + " = " + factor.str() + " * " + small.str());
  }
}

void suite_counting(const VerifyConfig& cfg, Recorder& rec)
{
  for (int m = 0; m <= cfg.m; ++m) {
    for (int n = m; n <= std::min(cfg.max_n, 8); ++n) {
      const BigInt closed = count_partial_perms(m, n);
      const BigInt exhaustive = enumerate_partial_perms(m, n).size();
      BigInt by_classes = 0;
      for (const auto& rho : enumerate_shapes(m, n, false))
        by_classes += cached_class_size(rho, n);
      rec.check_lazy(closed == exhaustive && closed == by_classes, [&] {
        return "|P^" + std::to_string(m) + "_" + std::to_string(n) + "|: closed " + closed.str() +
               ", exhaustive " + exhaustive.str() + ", class sum " + by_classes.str();
      });
    }
  }
}

void suite_psi(const VerifyConfig& cfg, Recorder& rec)
{
  const int top_n = std::min(cfg.max_n, 6);
  for (int m = 0; m <= cfg.m; ++m) {
    for (int n = std::max(m, 1); n <= top_n; ++n) {
      for (const auto& lambda : enumerate_shapes(m, n, true))
        rec.check(centralizer_check(k_class_sum(lambda, n), m),
                  "K_" + lambda.str() + " central for Stab_" + std::to_string(n) + "(" +
                      std::to_string(m) + ")");
      for (const auto& rho : shapes_upto(m, std::min(n, cfg.max_size))) {
        const int fixed = rho.m1();
        const auto expected = k_class_sum(rho.complete(n), n)
                                  .scaled(binomial(n - rho.size() + fixed, fixed));
        rec.check(psi(class_sum(rho, n)) == expected,
                  "psi(A_" + rho.str() + "(" + std::to_string(n) + ")) = C * K");
      }
    }
  }

  std::mt19937_64 rng(cfg.seed);
  std::map<std::pair<int, int>, std::vector<PartialPermutation>> pools;
  for (int trial = 0; trial < 500; ++trial) {
    const int m = static_cast<int>(rng() % static_cast<unsigned>(cfg.m + 1));
    const int lo = std::max(m, 1);
    const int hi = std::max(lo, top_n);
    const int n = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    auto& pool = pools[{m, n}];
    if (pool.empty())
      pool = enumerate_partial_perms(m, n);
    auto random_sum = [&] {
      FormalSum s(m, n);
      const int terms = 1 + static_cast<int>(rng() % 4);
      for (int t = 0; t < terms; ++t)
        s.add(pool[rng() % pool.size()], static_cast<int>(rng() % 7) - 3);
      return s;
    };
    const FormalSum x = random_sum();
    const FormalSum y = random_sum();
    rec.check(psi(x * y) == psi(x) * psi(y),
              "psi multiplicative, trial " + std::to_string(trial));
  }
}

void suite_theorem(const VerifyConfig& cfg, Recorder& rec)
{
  for (int m = 0; m <= cfg.m; ++m) {
    const auto shapes = proper_shapes(m, cfg.max_size);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < shapes.size(); ++i)
      for (std::size_t j = 0; j < shapes.size(); ++j)
        pairs.emplace_back(i, j);

    parallel_for(pairs.size(), cfg.threads, [&](std::size_t idx) {
      const auto& lambda = shapes[pairs[idx].first];
      const auto& delta = shapes[pairs[idx].second];
      const auto polys = structure_polys(lambda, delta);

      for (const auto& [rho, poly] : polys) {
        rec.check_lazy(structure_poly(lambda, delta, rho) == poly, [&] {
          return "per-shape and bulk structure polynomials differ for " + lambda.str() + " * " +
                 delta.str() + " -> " + rho.str();
        });
      }

      for (int n = std::max({lambda.size(), delta.size(), m}); n <= cfg.max_n; ++n) {
        std::map<MarkedCycleShape, BigInt> predicted;
        for (const auto& [rho, poly] : polys)
          if (rho.size() <= n)
            if (BigInt v = poly.eval(n); v != 0)
              predicted[rho.complete(n)] = v;

        const auto lambda_n = lambda.complete(n);
        const auto delta_n = delta.complete(n);
        const auto observed = centralizer_expansion(lambda_n, delta_n, n);
        const std::string where = lambda.str() + " * " + delta.str() + " at n=" + std::to_string(n);
        rec.check(observed == predicted, "K-expansion matches structure polynomials for " + where);
        for (const auto& [rho_n, value] : predicted) {
          const BigInt brute = brute_force_c(lambda_n, delta_n, rho_n, n);
          rec.check_lazy(brute == value, [&] {
            return "c^" + rho_n.str() + " for " + where + ": polynomial " + value.str() +
                   ", brute force " + brute.str();
          });
        }
      }
    });
  }
}

void suite_lemma(const VerifyConfig& cfg, Recorder& rec)
{
  for (int m = 0; m <= cfg.m; ++m) {
    for (int n = m; n <= std::min(cfg.max_n, 6); ++n) {
      for (const auto& rho : shapes_upto(m, std::min(n, cfg.max_size))) {
        const auto base = k_class_sum(rho.complete(n), n);
        for (int k = 0; k <= n - rho.size(); ++k) {
          const auto padded = rho.pad(k).complete(n);
          rec.check(padded == rho.complete(n) && k_class_sum(padded, n) == base,
                    "K_" + rho.str() + " = K_" + rho.pad(k).str() + " at n=" + std::to_string(n));
        }
      }
    }
  }
}

void suite_filtration(const VerifyConfig& cfg, Recorder& rec)
{
  for (int m = 0; m <= cfg.m; ++m) {
    for (int n = m; n <= std::min(cfg.max_n, 5); ++n) {
      const auto all = enumerate_partial_perms(m, n);
      std::vector<int> degrees;
      degrees.reserve(all.size());
      for (const auto& p : all)
        degrees.push_back(deg2(p));
      std::size_t bad = 0;
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          const auto q = product(all[i], all[j]);
          if (deg2(q) > degrees[i] + degrees[j] || q.size() > all[i].size() + all[j].size())
            ++bad;
        }
      }
      rec.check(bad == 0, "exhaustive deg1/deg2 subadditivity on P^" + std::to_string(m) + "_" +
                              std::to_string(n) + " (" + std::to_string(all.size()) + "^2 pairs, " +
                              std::to_string(bad) + " violations)");
    }
  }

  std::mt19937_64 rng(cfg.seed ^ 0xf17a7105ull);
  std::size_t bad = 0;
  for (std::size_t t = 0; t < cfg.random_pairs; ++t) {
    const int m = static_cast<int>(rng() % static_cast<unsigned>(cfg.m + 1));
    const int n = std::max(m, 1) + static_cast<int>(rng() % static_cast<unsigned>(9 - std::max(m, 1)));
    const auto p = random_partial_perm(m, n, rng);
    const auto q = random_partial_perm(m, n, rng);
    if (deg2(product(p, q)) > deg2(p) + deg2(q))
      ++bad;
  }
  rec.check(bad == 0, "random deg2 subadditivity, " + std::to_string(cfg.random_pairs) +
                          " pairs at n <= 8 (" + std::to_string(bad) + " violations)");
}

void suite_degree_bound(const VerifyConfig& cfg, Recorder& rec)
{
  for (int m = 0; m <= cfg.m; ++m) {
    const auto shapes = proper_shapes(m, cfg.max_size);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < shapes.size(); ++i)
      for (std::size_t j = 0; j < shapes.size(); ++j)
        pairs.emplace_back(i, j);
    parallel_for(pairs.size(), cfg.threads, [&](std::size_t idx) {
      const auto& lambda = shapes[pairs[idx].first];
      const auto& delta = shapes[pairs[idx].second];
      for (const auto& [rho, poly] : structure_polys(lambda, delta)) {
        const auto db = degree_and_bound(lambda, delta, rho, poly);
        rec.check_lazy(db.holds(), [&] {
          return "degree " + std::to_string(*db.degree) + " exceeds bound for " + lambda.str() +
                 " * " + delta.str() + " -> " + rho.str();
        });
      }
    });
  }

  if (cfg.m >= 2) {
    const auto main = degree_and_bound(parse_shape("(1,2)(*,*)", 2), parse_shape("(1)(2)(*,*)", 2),
                                       parse_shape("(1,2)", 2));
    rec.check(main.degree == 2 && main.bound == 3, "(1,2)(*,*) x (1)(2)(*,*) -> (1,2): degree 2, bound 3");
    const auto other = degree_and_bound(parse_shape("(1,2,*,*)", 2), parse_shape("(1)(2,*,*)", 2),
                                        parse_shape("(1,2,*)(*,*)", 2));
    rec.check(other.floor_bound == 1 && other.holds(), "(1,2,*,*) x (1)(2,*,*) -> (1,2,*)(*,*): bound 1");
  }
}

void suite_stability(const VerifyConfig& cfg, Recorder& rec)
{
  std::size_t asymmetric = 0;
  for (int m = 0; m <= cfg.m; ++m) {
    const auto shapes = shapes_upto(m, cfg.max_size);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < shapes.size(); ++i)
      for (std::size_t j = 0; j < shapes.size(); ++j)
        pairs.emplace_back(i, j);
    std::mutex mutex;
    parallel_for(pairs.size(), cfg.threads, [&](std::size_t idx) {
      const auto& lambda = shapes[pairs[idx].first];
      const auto& delta = shapes[pairs[idx].second];
      const int s = lambda.size() + delta.size();
      const auto universal = universal_expansion(lambda, delta).coeffs();
      for (int n = s; n <= s + 2; ++n) {
        rec.check(multiply_invariant(lambda, delta, n).coeffs() == universal,
                  "A_" + lambda.str() + " A_" + delta.str() + " stable at n=" + std::to_string(n));
      }
      if (universal != universal_expansion(delta, lambda).coeffs()) {
        std::lock_guard lock(mutex);
        ++asymmetric;
      }
    });
  }
  rec.note(std::to_string(asymmetric) + " ordered pairs with k_{lambda delta} != k_{delta lambda}");
}

} // namespace

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{"prop-size", "psi",          "theorem",
                                              "lemma",     "filtration",   "degree-bound",
                                              "stability", "counting"};
  return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const VerifyConfig& config,
                                   std::ostream* log)
{
  if (config.m < 0 || config.max_size < 0 || config.max_n < 0)
    throw std::invalid_argument("verification bounds must be non-negative");

  std::vector<std::string> selected;
  if (name == "all") {
    selected = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), name) !=
             suite_names().end()) {
    selected.push_back(name);
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }

  std::vector<SuiteReport> reports;
  for (const auto& suite : selected) {
    Recorder rec(suite);
    if (suite == "prop-size")
      suite_prop_size(config, rec);
    else if (suite == "psi")
      suite_psi(config, rec);
    else if (suite == "theorem")
      suite_theorem(config, rec);
    else if (suite == "lemma")
      suite_lemma(config, rec);
    else if (suite == "filtration")
      suite_filtration(config, rec);
    else if (suite == "degree-bound")
      suite_degree_bound(config, rec);
    else if (suite == "stability")
      suite_stability(config, rec);
    else if (suite == "counting")
      suite_counting(config, rec);
    auto report = rec.take();
    if (log) {
      *log << "suite " << report.suite << ": " << report.checks << " checks, " << report.failures
           << " failures" << (report.passed() ? " [PASS]" : " [FAIL]") << "\n";
      for (const auto& n : report.notes)
        *log << "  " << n << "\n";
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

} // namespace mcent
