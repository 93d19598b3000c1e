#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotred::cli {

enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,
  kInconclusive = 2,
  kUsage = 64,
  kDataError = 65,
  kNoInput = 66,
  kCantCreate = 73,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace knotred::cli
