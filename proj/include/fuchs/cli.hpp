#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuchs {

// Exit codes: 0 success, 1 hard error, 2 hypothesis failure (report still written).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuchs
