#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace succinct {

/// JSON reports carry "schema": cli_schema.
inline constexpr const char* cli_schema = "succinct-cli/1";

/// Runs one invocation; args excludes the program name. Returns the exit
/// status: 0 valid/found, 1 invalid/absent, 2 input error, 3 cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace succinct
