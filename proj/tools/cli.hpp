#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nctorus::cli {

/// Exit codes: 0 success, 1 precondition failure (e.g. non-hyperbolic input), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace nctorus::cli
