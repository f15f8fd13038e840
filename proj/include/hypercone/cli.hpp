#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercone {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitHolds = 0,         ///< In / Holds / suite passed
  kExitFails = 1,         ///< Out / FailsWithWitness / suite failed
  kExitParse = 2,         ///< unusable input: parse errors, bad ids, violated preconditions
  kExitDimension = 3,     ///< dimension mismatch
  kExitInconclusive = 4,  ///< boundary-ambiguous or inconclusive
};

/// Runs the tool on args (without the program name). JSON goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypercone
