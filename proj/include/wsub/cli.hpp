#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsub {

/// Exit codes shared by every subcommand.
inline constexpr int kExitFound = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotFound = 2;

/// Runs the `wsub` command line. `args` excludes the program name; inputs
/// named "-" are read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wsub
