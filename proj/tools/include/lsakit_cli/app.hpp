#pragma once

#include <iosfwd>

namespace lsakit::cli {

/// Entry point of the lsakit tool. Exit codes: 0 all selected checks pass, 1 a check
/// failed or a construction was refused, 2 usage, I/O, schema or syntax errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lsakit::cli
