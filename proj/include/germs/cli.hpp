#pragma once

#include <ostream>

namespace germs {

/// Entry point of the `germs` tool. Exit status: 0 pass, 1 when the math
/// says no (inconsistent, infinite, undecided, no section, failed check),
/// 2 on malformed input or usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace germs
