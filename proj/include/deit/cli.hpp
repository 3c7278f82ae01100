#ifndef DEIT_CLI_HPP
#define DEIT_CLI_HPP

#include <iosfwd>

namespace deit {

// Entry point shared by the binary and the in-process CLI tests.
// Exit codes: 0 success, 2 invalid parameters, 3 bisection bracket without a
// regime change, 4 integrator stability-guard violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace deit

#endif
