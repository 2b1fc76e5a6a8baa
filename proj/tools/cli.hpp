#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fsgss::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // also "signature invalid" for verify
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsgss::cli
