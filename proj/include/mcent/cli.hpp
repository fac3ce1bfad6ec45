#pragma once

#include <iosfwd>

namespace mcent {

/// Exit codes: 0 success, 1 a verification or assertion failed, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point for the `mcent` command; subcommands shape, mult, poly, table, verify.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mcent
