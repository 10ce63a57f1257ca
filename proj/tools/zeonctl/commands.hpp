#pragma once

#include <iosfwd>

namespace zeonctl {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kDomain = 3, kInternal = 4 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zeonctl
