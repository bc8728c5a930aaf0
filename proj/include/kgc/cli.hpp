#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgc::cli {

// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 2,
    kBracketFailure = 3,
    kAccuracyFailure = 4,
    kVerificationFailure = 5,
};

/// Environment variable that, when set, replaces "." as the default output
/// directory of the figures command.
inline constexpr const char* kOutputDirEnv = "KGCASIMIR_OUTPUT_DIR";

/// Runs the command line (without the program name). Data goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgc::cli
