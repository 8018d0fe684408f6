#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gpsr {

enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitRuntime = 2 };

// gpsr_sim entry point. `args` excludes the program name.
//   run      --scenario F [--trace F] [--stats F] [--seed N] [--repeat N]
//   validate --scenario F
//   graph    --scenario F --method RNG|GG --out F
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpsr
