#pragma once

#include <iosfwd>

namespace bodycad {

/// Entry point of the bodycad tool. Subcommands: analyze, check-graph,
/// crossvalidate. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bodycad
