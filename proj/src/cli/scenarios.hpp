#pragma once

#include "cli/config.hpp"

#include <ostream>

namespace maxfock::cli {

enum ExitCode : int { kOk = 0, kInvariantFailure = 1, kConfigError = 2 };

/// Executes one validated config: writes summary.json, maxfock.log and scenario artifacts
/// under config.output, mirrors the log to `console`, and returns the exit status.
int run(const RunConfig& config, std::ostream& console);

} // namespace maxfock::cli
