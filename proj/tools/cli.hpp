#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpld::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;    // unreadable file, parse error, bad flags
inline constexpr int kExitContract = 3; // precondition violated

/// Runs one `mpld` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mpld::cli
