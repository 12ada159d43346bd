#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cnull::cli {

enum ExitCode : int {
  kSuccess = 0,
  kHypothesis = 2,
  kPrecision = 3,
  kInput = 4,
};

/// Runs one command line (args[0] is the program name). The report goes to
/// `out` (or the --out file), error messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cnull::cli
