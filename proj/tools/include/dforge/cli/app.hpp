#pragma once

#include <iosfwd>

namespace dforge::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kParseError = 1, kDomainError = 2 };

/// `dforge <command> --in job.json [--seed S] [--certify-bound N] [--jobs J]`.
/// The result JSON goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dforge::cli
