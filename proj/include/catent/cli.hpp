#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catent::cli {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 domain errors, 2 usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catent::cli
