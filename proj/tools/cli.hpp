#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace severi::cli {

enum ExitCode { ok = 0, usage = 1, consistency = 2, io = 3 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace severi::cli
