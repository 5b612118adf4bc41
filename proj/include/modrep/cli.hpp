#pragma once

// Command-line front end.  Kept as a library function so tests can drive it
// with captured streams; the binary in tools/ is a thin wrapper.

#include <iosfwd>
#include <string>
#include <vector>

namespace modrep {

/// Runs one invocation.  `args` excludes the program name.  Reports go to
/// `out` (text by default, JSON with --json), diagnostics and wall-clock
/// timing to `err`.  Returns the process exit code: 0 when every gating
/// check passes, 1 on a verification failure, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace modrep
