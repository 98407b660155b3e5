#pragma once

#include <iosfwd>

namespace moncli {

/// Entry point shared by the `mon` binary and the tests.
/// Exit status: 0 success, 1 negative decision or property violation, 2 malformed input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace moncli
