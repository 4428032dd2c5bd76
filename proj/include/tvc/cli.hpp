#pragma once
// Command-line front end. Exit codes: 0 success, 1 usage, 2 data error,
// 3 numerical error.

#include <iosfwd>
#include <string>
#include <vector>

namespace tvc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitNumerical = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tvc::cli
