#pragma once

#include <iosfwd>

namespace dfl::selftest {

/// Run every module's invariant suite against deterministic fixed-seed
/// inputs, writing one line per suite to `log`. Returns true when all
/// suites pass. Used by the CLI's `selftest` subcommand.
bool run_all(std::ostream& log);

}  // namespace dfl::selftest
