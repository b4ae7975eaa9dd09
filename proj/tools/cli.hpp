#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace torgit::cli {

/// Runs one command line (args excludes the program name) and writes JSON to out.
/// Returns 0 on success, 1 for input errors, 2 for declined computations, 3 for
/// internal invariant violations.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace torgit::cli
