#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace levigon {

/// Runs one CLI invocation. args excludes the program name.
/// Exit codes: 0 all requested checks passed, 1 a check failed,
/// 2 usage or input error, 3 work budget exceeded.
int cli_dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace levigon
