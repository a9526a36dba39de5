#pragma once

#include <iosfwd>

namespace hyperlay::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kBadFlags = 2,
  kParseError = 3,
  kIncompatible = 4,
};

/// Entry point of the `hyperlay` tool. Subcommands: layout, render, metrics,
/// compare, gen. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperlay::cli
