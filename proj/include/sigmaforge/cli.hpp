#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigmaforge {

// Exit codes: 0 success, 1 failed check, 2 configuration error, 3 internal
// verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigmaforge
