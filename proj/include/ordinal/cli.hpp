#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ordinal::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

// Runs one `ordinal` invocation. `args` excludes the program name. Reports go
// to `out` (or --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordinal::cli
