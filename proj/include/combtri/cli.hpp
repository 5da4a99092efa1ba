#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace combtri::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification failure or unsupported structure
inline constexpr int kExitUsage = 2;

// args excludes the program name. Output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace combtri::cli
