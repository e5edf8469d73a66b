#pragma once

#include <iosfwd>

namespace braidforge::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 input or usage error,
// 3 an enumeration guard was exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace braidforge::cli
