#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace netdiff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs `netdiff <subcommand> [flags]`. `args` excludes the program name.
/// Results go to `out` unless a flag names an output file; diagnostics go to
/// `err`. Returns 0 on success, 1 on a domain error (its name is printed
/// first on `err`), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netdiff::cli
