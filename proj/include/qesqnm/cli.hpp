#ifndef QESQNM_CLI_HPP
#define QESQNM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qesqnm {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 2,
    kExitVerificationFailed = 3,
    kExitUnsupported = 4,
};

/// Command-line entry point; `args` excludes the program name. Artifacts go
/// to `out` unless --out names a file, diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qesqnm

#endif
