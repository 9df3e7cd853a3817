#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relpoly::cli {

// Runs one subcommand. Exit codes: 0 success, 1 domain error, 2 usage,
// parse or I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relpoly::cli
