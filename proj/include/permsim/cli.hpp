#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permsim {

// Exit codes: 0 = indistinguishable / similar / report written,
// 1 = distinct / not similar, 2 = usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permsim
