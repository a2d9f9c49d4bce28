#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lindex::cli {

// Exit codes: 0 ok, 1 usage / I/O / parse error, 2 domain failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lindex::cli
