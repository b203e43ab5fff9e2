#pragma once

#include <iosfwd>

namespace speh {

/// Exit codes: 0 success, 1 malformed input, 2 domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace speh
