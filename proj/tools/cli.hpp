// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinhol::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kPass = 0,
  kFail = 1,       // a computed verdict failed
  kUsage = 2,      // bad arguments or unparsable input
  kDataError = 3,  // well-formed input that cannot be used
};

/// Runs the command line `args` (args[0] is the program name). The JSON report goes to
/// `out`, diagnostics for usage and data errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinhol::cli
