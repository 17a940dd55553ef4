#pragma once

namespace graphon {

// Entry point behind the command-line tool; exposed so tests can exercise
// the exit-code contract in-process. Exit codes: 0 success, 1 runtime error
// (one-line diagnostic on stderr), 2 usage error (usage text on stderr).
int cli_main(int argc, const char* const* argv);

}  // namespace graphon
