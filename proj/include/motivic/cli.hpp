#pragma once

namespace motivic {

/// Command-line entry point. Subcommands: eval, trace, verify, expand,
/// count, table. Exit codes: 0 success, 1 parse error, 2 non-unit division,
/// 3 evaluation pole, 4 verification failure; diagnostics go to stderr.
int run(int argc, const char* const* argv);

} // namespace motivic
