#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leosys {

/// Command driver. Exit codes: 0 success, 1 check failure, 2 usage or
/// parse error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace leosys
