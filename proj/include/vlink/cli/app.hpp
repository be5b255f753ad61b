#pragma once

#include <iosfwd>

namespace vlink::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBound = 3;
inline constexpr int kExitPrecondition = 4;

// Runs the `vlink` command line. Library errors map to the exit codes above;
// other failures return 1.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vlink::cli
