#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rbalg {

/// Exit codes: 0 every check passed, 1 an axiom or hypothesis failed, 2 usage or parse error.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbalg
