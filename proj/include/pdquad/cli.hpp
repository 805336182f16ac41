#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdquad::cli {

inline constexpr int kSchemaVersion = 1;

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kViolation = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; `in` is read for the file argument "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pdquad::cli
