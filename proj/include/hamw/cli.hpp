#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamw::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kDegenerate = 3 };

// Entry point of the `hamw` tool. Reports go to `out` (or the --out file),
// diagnostics and usage text to `err`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

// Same, with the arguments that follow the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamw::cli
