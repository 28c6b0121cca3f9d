#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evencycle::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kFound = 0,
  kNotFound = 1,
  kPrecondition = 2,
  kBudget = 3,
  kIo = 4,
  kInternal = 70,  // an internal invariant failed; always a bug
};

/// Runs one command. args excludes the program name. Graph input comes from
/// --input or, when absent, from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace evencycle::cli
