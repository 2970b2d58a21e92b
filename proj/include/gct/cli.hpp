#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gct::cli {

/// Exit codes of the command line tool.
enum ExitCode : int { ok = 0, domain_failure = 1, usage_error = 2 };

/// Runs one command (arguments without the program name). Results go to
/// `out` as a JSON document; usage problems are reported on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const char* version();

}  // namespace gct::cli
