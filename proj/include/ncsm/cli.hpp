#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncsm {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitGuardRefusal = 3;

// Runs one command line (program name excluded). Results go to out,
// diagnostics to err; the return value is the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ncsm
