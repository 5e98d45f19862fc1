#pragma once

#include <iosfwd>

namespace solvable::cli {

// Exit codes: 0 all verdicts pass, 1 verification failure, 2 usage or domain error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace solvable::cli
