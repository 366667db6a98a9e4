#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "io.hpp"

namespace gelfand::cli {

/// Exit codes of the command-line tool.
enum Exit : int { kHolds = 0, kFails = 1, kInputError = 2, kUnsupported = 3 };

/// The exit code an error maps to.
int exit_code_for(ErrorCode code) noexcept;

/// Runs one command line (args excludes the program name). The human summary
/// goes to `out`, diagnostics to `err`. The report document is returned
/// through `report` and also written to --report when given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, io::Json* report = nullptr);

/// The report with its timing block removed, serialized; identical inputs
/// give identical payloads.
std::string payload(const io::Json& report);

}  // namespace gelfand::cli
