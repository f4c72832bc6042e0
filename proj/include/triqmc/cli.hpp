#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triqmc::cli {

enum ExitCode : int { ok = 0, usage = 2, runtime = 3 };

/// Runs the command line `args` (args[0] is the program name). Regular
/// output goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Thread cap from TRIQMC_THREADS, else the hardware concurrency.
unsigned thread_cap();

} // namespace triqmc::cli
