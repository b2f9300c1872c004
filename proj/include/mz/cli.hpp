#pragma once

#include <iosfwd>

namespace mz {

/// Entry point for the command-line front end (subcommands: compute, polygon,
/// certify, sweep, orbit). Returns the process exit code:
///   0 success, 2 invalid parameters, 3 internal identity failure,
///   4 a Reducible verdict, 5 an Inconclusive verdict not marked skipped,
///   6 a FAIL orbit report.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mz
