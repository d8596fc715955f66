#pragma once

#include <iosfwd>

namespace wls::cli {

enum ExitCode : int { kSuccess = 0, kDomainFailure = 1, kUsage = 2 };

/// Runs one `wls` invocation. Machine-readable results go to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wls::cli
