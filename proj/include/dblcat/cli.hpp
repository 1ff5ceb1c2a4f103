#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dblcat {

/// Exit codes: 0 success, 1 violations found, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dblcat
