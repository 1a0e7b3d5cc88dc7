#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flattorus {

/// Exit codes: 0 success, 2 input error, 3 unsupported regime, 4 internal
/// consistency failure (two routes disagreeing is loud by design).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flattorus
