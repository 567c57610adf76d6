#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thue::cli {

enum Exit : int {
  kOk = 0,
  kNegative = 1,
  kInconclusive = 2,
  kUsage = 10,
  kParse = 11,
  kFailure = 12,
};

// args excludes the program name. Machine output goes to `out`, diagnostics
// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thue::cli
