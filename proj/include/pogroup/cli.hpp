#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pogroup/error.hpp"

namespace pogroup::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;

/// Process exit status for a library error.
int exit_code(ErrorKind kind);

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pogroup::cli
