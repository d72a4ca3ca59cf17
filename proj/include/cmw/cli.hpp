#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Parses `args` (without the program name), runs one subcommand and writes
// a JSON report {command, inputs, result, diagnostics} to `out`. Errors go
// to `err`: exit 2 for usage errors, 1 for library errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmw::cli
