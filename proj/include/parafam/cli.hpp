#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parafam::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage, I/O, or schema error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parafam::cli
