#pragma once

#include <iosfwd>

namespace seqgame {

// entry point behind the seqgame binary
// returns the process exit status: 0 when the command ran and its property
// held, 1 on a property failure or engine error (one diagnostic line on err),
// 2 on a usage error naming the offending flag
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seqgame
