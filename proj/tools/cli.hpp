#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace idealiser::cli {

/// Exit codes. `analyze` returns `unknown` when either side is undecided.
enum Exit : int { ok = 0, input_error = 1, unknown = 2, resource_limit = 3 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idealiser::cli
