#ifndef GARSIDE_CLI_HPP
#define GARSIDE_CLI_HPP

#include <iosfwd>

namespace garside {

/// Runs the command line front end. Returns 0 on success, 1 for a negative
/// domain answer and 2 for input or usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace garside

#endif
