#pragma once

#include <ostream>

namespace vcfam::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kInfeasible = 3 };

// Entry point behind the `vcfam` executable. Data goes to `out` (or --out),
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vcfam::cli
