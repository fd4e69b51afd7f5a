#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seifcalc::cli {

enum ExitCode { kOk = 0, kInvalidInput = 1, kInfeasible = 2, kInternal = 3 };

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`; `in` backs `--input -`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             std::istream& in);

}  // namespace seifcalc::cli
