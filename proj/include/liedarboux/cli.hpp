#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ld::cli {

/// Process exit codes.
enum ExitCode : int {
  kAllPass = 0,
  kToleranceFailure = 1,
  kUsageError = 2,
  kNumericalError = 3,
};

/// Runs one command line (without the program name):
///
///   helix --a A --b B [--s0 S0] --s1 S1 [--n N] [--out FILE] [--report FILE]
///   reconstruct (--kappa EXPR --tau EXPR | --table FILE) --s0 S0 --s1 S1 [--n N]
///               [--variant plus|minus|both] [--start X,Y,Z] [--out FILE]
///   compare (--kappa EXPR --tau EXPR | --table FILE) --s0 S0 --s1 S1 [--n N]
///           [--out FILE] [--frames FILE] [--report FILE]
///   verify --config FILE [--s0 S0] [--s1 S1] [--n N] [--variant V]
///          [--tol NAME=VALUE]... [--report FILE] [--jobs J]
///
/// `--out -` streams CSV to `out`; human-readable reports then go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ld::cli
