#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bitminer::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,  // verify found a difference
  kInputError = 2,
  kGuardRefused = 3,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out`; reports, diagnostics and usage errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bitminer::cli
