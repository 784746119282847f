#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regretlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // self-check failure, failed spec, I/O error
inline constexpr int kExitConfigError = 2;  // bad arguments or configuration

/// Entry point of the `regretlab` tool. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, const char* const* argv);

}  // namespace regretlab
