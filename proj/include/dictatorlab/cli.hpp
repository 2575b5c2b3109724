#pragma once

namespace dictatorlab {

/// Entry point behind the `dictatorlab` binary; separated so tests can
/// drive subcommands in-process. Exit codes: 0 success, 1 domain or
/// invariant violation, 2 I/O failure.
int cli_main(int argc, const char* const* argv);

}  // namespace dictatorlab
