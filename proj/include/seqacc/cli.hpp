#ifndef SEQACC_CLI_HPP
#define SEQACC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace seqacc::cli {

/// Runs the command-line front end. Returns the process exit code:
/// 0 success, 1 configuration error, 2 input error, 3 numerical error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace seqacc::cli

#endif
