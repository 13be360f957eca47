// Command-line front end. Every invocation prints one JSON summary on stdout.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rrk::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kInternal = 3 };

int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrk::cli
