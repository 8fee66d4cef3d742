#ifndef MJB_CLI_APP_HPP
#define MJB_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mjb/cli/check.hpp"

namespace mjb::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

/// Runs the `mjb` command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const CheckBuilders& builders = CheckBuilders::defaults());

}  // namespace mjb::cli

#endif  // MJB_CLI_APP_HPP
