#pragma once

#include <iosfwd>

namespace gridloc::cli {

// Exit codes: 0 success, 1 usage/parse/contract error, 2 `check` found a
// disagreement between the fast algorithm and the oracle.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMismatch = 2;

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gridloc::cli
