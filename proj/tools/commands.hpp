#pragma once

#include <iosfwd>

#include "config.hpp"
#include "report.hpp"

namespace linezero::cli {

// cfg must have passed validate().
RunReport run(const RunConfig& cfg);

// Whole command line: parse, validate, run, emit. Returns the exit code
// (0 pass, 1 counterexample, 2 usage, 3 non-convergence).
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linezero::cli
