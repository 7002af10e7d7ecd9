#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fraisse::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). The report goes to
/// `out`, usage and input errors to `err`. Returns 0 when every check
/// passes, 1 when a check fails, 2 on a usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fraisse::cli
