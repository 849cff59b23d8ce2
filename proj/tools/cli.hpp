#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace farkas::cli {

// Exit codes.
enum Exit : int {
    kOk = 0,
    kNegative = 1,
    kParse = 2,
    kLimit = 3,
    kOracleDisagreement = 4,
    kNotInClass = 5,
    kDisconnected = 6,
    kInternal = 7,
};

// Runs the command line (args excludes the program name). The JSON report
// goes to out, the human-readable summary and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace farkas::cli
