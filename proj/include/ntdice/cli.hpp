#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ntdice::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. `args` excludes the program name. `-` as a path means
/// `in` / `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ntdice::cli
