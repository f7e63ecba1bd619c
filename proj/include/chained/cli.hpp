#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chained {

/// Exit codes: 0 success, 1 validation failure or count mismatch, 2 usage error.
/// `args` excludes the program name. "-" as a file name means stdin / stdout.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chained
