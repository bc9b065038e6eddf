#pragma once

#include <iosfwd>

namespace lpi {

// Runs one CLI invocation. Returns 0 on success, 1 on refutation or error
// (diagnostic on err), 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lpi
