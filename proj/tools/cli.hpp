#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cwforest::cli {

enum ExitCode : int {
  kOk = 0,
  kWitnessFound = 1,
  kUsage = 2,
  kResourceCap = 3,
};

/// Runs `cwforest <row|locate|verify|cf|successor> [flags]` with args
/// excluding the program name. Output is written only after the command
/// completes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cwforest::cli
