#pragma once

#include <iosfwd>

namespace specht::cli {

// Full command dispatcher. Returns 0 on success, 1 when a verification found a
// counterexample, 2 on usage or parse errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace specht::cli
