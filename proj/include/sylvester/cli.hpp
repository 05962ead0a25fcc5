#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sylvester/rational.hpp"

namespace sylvester::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kInternal = 3,
};

/// Test-only fault injection; not reachable from the command line.
struct Hooks {
  /// (residue, delta): added to the constant coefficient of that class of
  /// the assembled quasipolynomial before `verify` compares against DP.
  std::optional<std::pair<std::int64_t, Rational>> corrupt_coefficient;
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Subcommands: count, waves, quasi, verify, bench.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace sylvester::cli
