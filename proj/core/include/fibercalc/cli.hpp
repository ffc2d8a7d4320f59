#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibercalc {

// Entry point shared by the binary and the tests.  Machine output goes to
// `out` as a single JSON document; diagnostics go to `err`.
// Exit codes: 0 success / checked true, 1 checked false, 2 usage error,
// 3 computation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibercalc
