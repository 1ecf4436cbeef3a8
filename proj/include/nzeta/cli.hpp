#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace nzeta::cli {

// args excludes the program name; returns the process exit code
// (0 success, 1 usage or input error, 2 failed hypothesis)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nzeta::cli
