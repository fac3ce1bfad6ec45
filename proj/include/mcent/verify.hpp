#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mcent {

/// Bounds for the verification suites. Suites sweep every m' in [0, m].
struct VerifyConfig
{
  int m = 2;
  int max_size = 4;
  int max_n = 7;
  std::uint64_t seed = 0x5eed2024;
  unsigned threads = 1;
  std::size_t random_pairs = 100000;
};

struct SuiteReport
{
  std::string suite;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  bool passed() const { return failures == 0; }
};

/// prop-size, psi, theorem, lemma, filtration, degree-bound, stability, counting.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Per-check progress and a summary
/// line per suite go to `log` when non-null.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<SuiteReport> run_suite(const std::string& name, const VerifyConfig& config,
                                   std::ostream* log = nullptr);

} // namespace mcent
