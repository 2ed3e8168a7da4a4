#pragma once

#include <istream>
#include <string>
#include <vector>

namespace holokrein::cli {

struct Result {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command. `args` excludes the program name; `in` backs "-" inputs.
/// Exit codes: 0 success, 1 domain error, 2 parse or usage error.
Result run(const std::vector<std::string>& args, std::istream& in);

}  // namespace holokrein::cli
