#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hompoisson {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one hompoisson command. `args` excludes the program name.
/// Returns 0 when every reported check passes, 1 when one fails, 2 on
/// usage, parse or I/O errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hompoisson
