#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace syl::cli {

// Runs one `syl` subcommand. `args` excludes the program name.
// Exit codes: 0 success or valid, 1 invalid or mismatch, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace syl::cli
