#pragma once

#include <iosfwd>

namespace phasegraph {

/// Exit codes: 0 success, 1 malformed input or usage, 2 verification failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phasegraph
