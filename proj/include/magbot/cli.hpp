#pragma once

#include <ostream>

namespace magbot {

/// Command-line entry point. Subcommands: field, sweep, friction, plan.
/// Returns 0 on success, 1 on config/validation/IO errors, 2 on numerical
/// failures. Diagnostics go to err; success paths write nothing there.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace magbot
