#pragma once

#include <iosfwd>

#include "rectcarto/metrics.hpp"

namespace rectcarto {

/// Exit codes of the command line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitIo = 2,
};

/// Entry point of the `rectcarto` tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Prints the summary block (one "label value" row per statistic, six decimals).
void print_summary(std::ostream& out, const SummaryStats& stats);

}  // namespace rectcarto
