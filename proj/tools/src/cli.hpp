#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shortbasis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalid = 2;

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shortbasis::cli
