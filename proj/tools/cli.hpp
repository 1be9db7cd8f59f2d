#pragma once

#include <iosfwd>

namespace celint {

/// Exit codes: 0 ok, 1 computation error, 2 bad input, 3 failed check.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace celint
