#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace finitop {

/// Runs the command-line interface. Exit codes: 0 success / property holds,
/// 1 property false / counterexample found / claim failed, 2 usage or input
/// error. FINITOP_MAX_POINTS overrides the product size bound.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finitop
