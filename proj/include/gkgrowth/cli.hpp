#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gkgrowth {

/// Entry point shared by the gkgrowth binary and the test suite.
/// Results go to `out`, diagnostics and warnings to `err`.
///
/// Exit codes: 0 success, 2 parse error, 3 semantic error, 4 typed
/// refusal (unsupported exact computation), 5 size limit exceeded,
/// 1 verification mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gkgrowth
