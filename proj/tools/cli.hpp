#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binframe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Returns 0 on success, 1 on a negative
// verdict (not a frame, not equivalent), 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace binframe::cli
