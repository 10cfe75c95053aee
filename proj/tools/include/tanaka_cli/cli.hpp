#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tanaka/report.hpp"

namespace tanaka::cli {

struct RunResult {
  int exit_code = 0;
  report::Report report;
};

// args excludes the program name. Text goes to out, diagnostics to err;
// "--json -" sends the JSON report to out instead of the text rendering.
RunResult run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Every suite report merged into one flat report, check names prefixed by their command.
report::Report merged_suite();

}  // namespace tanaka::cli
