#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shodlab::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 1,
    kVerificationFailed = 2,
    kInternalError = 3,
};

/// Environment variable that overrides the path enumeration cap.
inline constexpr const char* kCapVariable = "SHODLAB_MAX_SEMILENGTH";

/// Run one invocation. `args` excludes the program name. Results go to
/// `out`; diagnostics are a single line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shodlab::cli
