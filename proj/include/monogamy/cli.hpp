#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monogamy {

// Full command dispatch. Returns the process exit code: 0 on success, 1 when
// a campaign reports violations, 2 on usage or input errors. Never throws.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monogamy
