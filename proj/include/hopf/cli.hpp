#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; an element argument of `-` is read from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace hopf::cli
