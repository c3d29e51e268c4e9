#pragma once

// Command-line front end. Exit codes: 0 valid or success, 1 counterexample
// or obstruction, 2 usage or parse error, 3 budget exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace mvdelta::cli {

enum ExitCode : int { kOk = 0, kObstruction = 1, kUsage = 2, kBudget = 3 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mvdelta::cli
