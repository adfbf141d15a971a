#pragma once

// Command-line front end.  run_command takes the argument list without the
// program name, writes human-readable output to `out` and problems to
// `err`, and returns the process exit code:
//   0  success / verification passed
//   1  a verification ran to completion and failed
//   2  bad usage or invalid construction parameters

#include <iostream>
#include <string>
#include <vector>

namespace zccs {

int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                std::ostream& err = std::cerr);

}  // namespace zccs
