#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellmf::cli {

/// Exit status: 0 success, 1 failed verification or classification, 2 invalid input.
enum Exit { kOk = 0, kFailed = 1, kInvalid = 2 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ellmf::cli
