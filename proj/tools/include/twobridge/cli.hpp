#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twobridge::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,    // unexpected failure
  kInputError = 2,  // malformed input, bad flags, links
  kCrossCheck = 3,  // two methods disagreed
};

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twobridge::cli
