#pragma once

#include <iosfwd>

namespace ramsey::cli {

// Exit codes: 0 clean, 1 witness or bound violation, 2 usage/format error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ramsey::cli
