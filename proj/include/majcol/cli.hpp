#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace majcol {

// Runs the command-line front end. args excludes the program name.
// Exit codes: 0 success/PASS, 1 verification FAIL (or no colouring found),
// 2 usage or input error, 3 solver failure, 4 enumeration budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace majcol
