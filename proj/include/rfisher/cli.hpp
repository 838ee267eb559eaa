#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rfisher::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kValidationFailed = 3, kIoError = 4 };

/// Entry point of the `rfisher` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3", "1..5", "1,4,7" or combinations like "1..3,8".
std::vector<int> parse_int_list(const std::string& text);

} // namespace rfisher::cli
