#ifndef AGC_CLI_HPP
#define AGC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace agc {

/// Command-line entry point (also used directly by tests). Returns the exit
/// status: 0 success, 1 failed checks, 2 usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace agc

#endif
