#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jnb {

// Runs one CLI invocation (args exclude the program name) against the given
// streams.  Exit codes: 0 success / all conditions hold, 1 mathematical
// failure (condition false, not nilpotent, verification failed), 2 input or
// usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace jnb
