#pragma once

#include <iosfwd>

namespace sphpd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // invalid kernel, parameters or data
inline constexpr int kExitUsage = 2;   // unknown verb or flag, malformed option

/// Runs one command. Results go to `out` (CSV or JSON), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sphpd::cli
