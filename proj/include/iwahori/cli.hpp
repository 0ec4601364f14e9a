#pragma once

#include <iosfwd>

namespace iwahori {

/// Exit codes: 0 success, 1 usage or domain rejection, 2 resource bound
/// reached, 3 internal consistency failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace iwahori
