#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zeitlin::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kDivergedOrInconclusive = 2 };

/// Entry point behind the zeitlin-lab executable. `args` excludes the program
/// name. One summary line per run goes to `out`; errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Built-in configuration, pretty-printed JSON. Every key a config file may set
/// appears here; anything else is rejected.
std::string default_config_text();

}  // namespace zeitlin::cli
