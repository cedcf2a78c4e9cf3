#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kInvariant = 3,
};

/// Runs the `tc` command line. args[0] is the program name.
/// `in` backs "-" as an input path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tcg::cli
