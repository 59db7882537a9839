#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace matchext {

/// Runs one command line (without the program name). Exit codes: 0 success
/// or property holds, 1 property fails, 2 usage, domain or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matchext
