#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridrig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitSchema = 2;

/// Runs one command. `args` excludes the program name. JSON results go to
/// `out` (or the -o path), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace gridrig::cli
