#pragma once

#include <iosfwd>
#include <string>

#include "nlho_cli/config.hpp"

namespace nlho::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kToleranceBreach = 2, kNumericFailure = 3 };

// Each command writes its table or report to `out` and diagnostics to `err`,
// and returns kOk or kToleranceBreach. Library exceptions propagate.
int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_wavefunction(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_classical(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_coherent(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_complexifier_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches by subcommand name and maps exceptions onto exit codes,
/// printing the message to `err`.
int run_command(const std::string& name, const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nlho::cli
