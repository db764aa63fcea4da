#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumfree::cli {

/// Exit codes: 0 success, 1 a check failed, 2 usage or precondition error.
int run(int argc, char** argv);
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumfree::cli
