#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pposets {

// Runs the command-line tool on args (program name excluded), writing to the
// given streams.  Exit codes: 0 success, 1 usage or input errors,
// 2 verification failure, 3 resource-guard violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pposets
