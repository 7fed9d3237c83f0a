#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wtensor {

// Parses and runs one command line (without the program name). Reports are
// written to `out` as JSON lines; usage and validation errors go to `err`.
// Exit contract: 0 = all PASS, 1 = at least one FAIL (report emitted),
// 2 = usage/parameter error. Timing is never written to `out`, so a fixed
// command line produces byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wtensor
