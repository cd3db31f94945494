#pragma once

namespace qcsurf::cli {

/// Entry point of the command-line front end.  Exit codes: 0 success,
/// 2 usage error, 3 domain error.
int run(int argc, const char* const* argv);

}  // namespace qcsurf::cli
