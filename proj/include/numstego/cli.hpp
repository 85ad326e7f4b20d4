#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace numstego::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIoOrFormat = 2,
  kCapacity = 3,
};

// Size of the pseudorandom payload `analyze` embeds when none is given.
inline constexpr std::size_t kAnalyzePayloadBytes = 128;
inline constexpr unsigned long long kDefaultSeed = 1;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace numstego::cli
