#pragma once

#include <string>
#include <vector>

namespace pathint::cli {

/// Runs one subcommand (generate | integrate | qv | levy | rie-check |
/// roughness | invariance). Returns the process exit code:
/// 0 success, 2 validation failure, 3 I/O failure, 4 numerical failure.
int run(const std::vector<std::string>& args);

}  // namespace pathint::cli
