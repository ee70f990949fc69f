#pragma once

namespace endgrid {

/// Command-line entry point. Exit codes: 0 success/pass, 1 verdict fail or
/// not-found, 2 usage error, 3 internal error.
int run_cli(int argc, const char* const* argv);

}  // namespace endgrid
