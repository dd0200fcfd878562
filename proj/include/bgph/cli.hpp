#pragma once

#include <string>
#include <vector>

namespace bgph {

// Exit codes: 0 success, 1 usage or parse error, 2 enumeration cap exceeded,
// 3 stability or property-suite failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace bgph
