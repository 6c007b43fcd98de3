#pragma once

namespace sqw {

// Entry point behind the sqw binary; exposed so tests can drive the CLI
// in-process. Exit codes: 0 success, 1 domain error (one-line reason whose
// first token is the error code), 2 usage error.
int cli_main(int argc, const char* const* argv);

} // namespace sqw
