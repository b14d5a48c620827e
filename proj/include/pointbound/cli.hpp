#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pointbound {

// Exit codes: 0 success, 1 computation error, 2 usage error, 3 a
// verify-paper line failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pointbound
