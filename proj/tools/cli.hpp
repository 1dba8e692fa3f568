#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monorec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs one CLI invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monorec::cli
