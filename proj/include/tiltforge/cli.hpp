#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiltforge {

// Exit codes: 0 ok, 1 not Dynkin type, 2 malformed input, 3 internal assertion, 4 invalid slice.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tiltforge
