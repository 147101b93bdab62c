#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chatelet {

// Exit codes: 0 success, 2 input error, 3 verification failure (verify only).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chatelet
