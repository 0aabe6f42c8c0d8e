#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace x0plus {

// exit codes: 0 success, 2 data error, 3 domain error, 64 usage
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace x0plus
