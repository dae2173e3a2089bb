#pragma once

#include <iosfwd>

namespace pregroup {

/// Exit codes: 0 success, 1 configuration or I/O error, 2 linguistic failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace pregroup
