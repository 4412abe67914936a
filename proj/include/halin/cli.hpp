#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace halin {

/// Exit codes: 0 ok, 1 usage or unsupported request, 2 I/O, parse or input
/// validation error, 3 verification or property suite failure.
/// `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halin
